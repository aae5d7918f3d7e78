#!/usr/bin/env python
"""
Look for separating models: for each axiom, a model of the other axioms that violates it.

Usage:
    python scan_independence.py --kind algebra --max-size 3 --budget 200000
    python scan_independence.py --kind algebra --axioms ABT0,ABT1f,ABT1g,ABT2,ABT3,wMIA
"""
import argparse
import os
import sys

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from betw import create_app
from betw.commands.search import parse_tags
from betw.models import AlgebraAxiom, FrameAxiom, MIA_TAG
from betw.services.format_service import FormatService
from betw.services.search_service import SearchService

B_ALGEBRA = 'ABT0,ABT1f,ABT1g,ABT2,ABT3,wMIA'
B_FRAME = 'BT0,BT1,BT2,BT3'


def main():
    parser = argparse.ArgumentParser(description='Scan an axiom set for independence within size bounds')
    parser.add_argument('--kind', choices=['frame', 'algebra'], default='algebra')
    parser.add_argument('--axioms', help='Comma-separated tags (default: the b-frame or b-algebra axioms)')
    parser.add_argument('--max-size', type=int, default=3, help='Largest frame or algebra size to try')
    parser.add_argument('--budget', type=int, default=None, help='Candidate budget for sizes beyond exhaustive')
    args = parser.parse_args()

    app = create_app(os.getenv('BETW_ENV', 'default'))
    with app.app_context():
        try:
            tags = parse_tags(args.axioms or (B_ALGEBRA if args.kind == 'algebra' else B_FRAME), args.kind)
        except ValueError as e:
            print(f"✗ {str(e)}")
            return 2
        family = FrameAxiom if args.kind == 'frame' else AlgebraAxiom
        ordered = [t for t in family if t in tags] + ([MIA_TAG] if MIA_TAG in tags else [])

        results = SearchService.independence_scan(
            ordered, args.kind, args.max_size, budget=args.budget, threads=app.config['THREADS']
        )
        independent = 0
        for tag in ordered:
            size, result = results[tag]
            name = getattr(tag, 'value', tag)
            if size is None:
                status = result.status.value if result else 'not scanned'
                print(f"✗ {name}: no separating model up to size {args.max_size} ({status})")
                continue
            independent += 1
            print(f"✓ {name}: separated at size {size}")
            model = result.first
            if args.kind == 'frame':
                print(FormatService.format_frame(model), end='')
            else:
                print(FormatService.format_algebra(model), end='')
        print(f"\n{independent}/{len(ordered)} axioms separated")
    return 0


if __name__ == '__main__':
    sys.exit(main())
