"""
Optimal piecewise constant compression of raw series into run-length form.
"""

from .apca import Segmentation, apca, ratio_to_k, segment_cost

__all__ = ['Segmentation', 'apca', 'ratio_to_k', 'segment_cost']
