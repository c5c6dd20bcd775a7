"""Shared type definitions for blockpoly."""

from typing import FrozenSet, Literal, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

# Exact mode keeps Python ints, float mode keeps complex
Coefficient = Union[int, complex]

CoefficientMode = Literal["int", "complex"]

# Stable vertex label (v1..vn for digraphs built from matrices)
VertexId = int

VertexSet = FrozenSet[VertexId]

Edge = Tuple[VertexId, VertexId]

# Anything digraph_of_matrix accepts
MatrixLike = Union[npt.NDArray[np.generic], Sequence[Sequence[Union[int, float, complex]]]]
