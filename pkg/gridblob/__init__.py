"""Pixel and voxel contact representations of graphs"""

__version__ = "0.1.0"
