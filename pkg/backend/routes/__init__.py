"""Route blueprints package - partitions, NCSym, lattice algebra modules and verification"""
