from betw.models import AxiomReport, CheckTag, MorphismMode, PointMap
from betw.services.frame_service import FrameService


class MorphismService:
    """Service for bounded and co-bounded morphisms between finite frames (middle-argument form)"""

    @staticmethod
    def parse_point_map(text, source_n, target_n):
        """
        Parse "0:0,1:1,..." into a PointMap.

        Every source point must be mapped exactly once.
        """
        mapping = [None] * source_n
        for item in (part.strip() for part in text.split(',')):
            if not item:
                continue
            try:
                src, dst = (int(side) for side in item.split(':'))
            except ValueError:
                raise ValueError(f"Map entry '{item}' is not of the form <point>:<point>")
            if not 0 <= src < source_n:
                raise ValueError(f"Source point {src} out of range for {source_n} points")
            if mapping[src] is not None:
                raise ValueError(f"Source point {src} is mapped twice")
            mapping[src] = dst
        missing = [i for i, image in enumerate(mapping) if image is None]
        if missing:
            raise ValueError(f"Map is not total: no image for points {missing}")
        return PointMap(source_n, target_n, tuple(mapping))

    @staticmethod
    def compose(first, second):
        """second after first"""
        if first.target_n != second.source_n:
            raise ValueError(f"Cannot compose a map into {first.target_n} points with one from {second.source_n}")
        return PointMap(first.source_n, second.target_n, tuple(second(first(x)) for x in range(first.source_n)))

    @staticmethod
    def _conditions(src, dst, fmap, negate, tag):
        """Forth then back; relations are complemented when negate is set"""
        n = src.n
        k = dst.n

        def rel_src(a, b, c):
            return src.has(a, b, c) != negate

        def rel_dst(a, b, c):
            return dst.has(a, b, c) != negate

        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if rel_src(x, y, z) and not rel_dst(fmap(x), fmap(y), fmap(z)):
                        return AxiomReport.failed(tag, (x, y, z), note='forth')

        # back: R'(u, f(x), v) needs y, z with f(y) = u, f(z) = v and R(y, x, z)
        preimages = [[y for y in range(n) if fmap(y) == u] for u in range(k)]
        for x in range(n):
            fx = fmap(x)
            for u in range(k):
                for v in range(k):
                    if not rel_dst(u, fx, v):
                        continue
                    if not any(rel_src(y, x, z) for y in preimages[u] for z in preimages[v]):
                        return AxiomReport.failed(tag, (u, x, v), note='back')
        return AxiomReport.ok(tag)

    @staticmethod
    def check_morphism(src, dst, fmap, mode):
        """
        Check a point map as a bounded or co-bounded morphism.

        Args:
            src: Source Frame
            dst: Target Frame
            fmap: PointMap from src points to dst points
            mode: MorphismMode

        Returns:
            AxiomReport; forth witnesses are (x, y, z), back witnesses (u, x, v)
        """
        if fmap.source_n != src.n or fmap.target_n != dst.n:
            raise ValueError(
                f"Map goes from {fmap.source_n} to {fmap.target_n} points, frames have {src.n} and {dst.n}"
            )
        if mode is MorphismMode.BOUNDED:
            return MorphismService._conditions(src, dst, fmap, False, CheckTag.BOUNDED)

        report = MorphismService._conditions(src, dst, fmap, True, CheckTag.COBOUNDED)
        oracle = MorphismService._conditions(
            FrameService.complement(src), FrameService.complement(dst), fmap, False, CheckTag.COBOUNDED
        )
        if oracle != report:
            raise AssertionError(f"Co-bounded check disagrees with bounded check on complements: {report} vs {oracle}")
        return report
