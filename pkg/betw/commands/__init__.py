# Command blueprints
