"""CART trees on Gini impurity, compiled with numba.

A tree is a set of parallel arrays indexed by node id. Node ids follow
preorder (a node's left subtree is numbered before its right subtree).
Leaves have ``feature == -1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np


@numba.njit(cache=True)
def _gini(n, pos):
    if n == 0:
        return 0.0
    p = pos / n
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


@numba.njit(cache=True)
def _best_split_on(X, y, work, start, end, f, scratch_v, scratch_y):
    """Best threshold on feature f for samples work[start:end].

    Returns (weighted child impurity, threshold, valid).
    """
    m = end - start
    for k in range(m):
        s = work[start + k]
        scratch_v[k] = X[s, f]
        scratch_y[k] = y[s]
    order = np.argsort(scratch_v[:m], kind="mergesort")
    total_pos = 0
    for k in range(m):
        total_pos += scratch_y[k]
    best_imp = np.inf
    best_thr = 0.0
    valid = False
    left_pos = 0
    for k in range(m - 1):
        left_pos += scratch_y[order[k]]
        a = scratch_v[order[k]]
        b = scratch_v[order[k + 1]]
        if a == b:
            continue
        nl = k + 1
        nr = m - nl
        imp = (nl * _gini(nl, left_pos) + nr * _gini(nr, total_pos - left_pos)) / m
        if imp < best_imp:
            best_imp = imp
            thr = a + (b - a) / 2.0
            if thr >= b:  # guard against rounding up to the right value
                thr = a
            best_thr = thr
            valid = True
    return best_imp, best_thr, valid


@numba.njit(cache=True)
def build_tree(X, y, idx, keys, m_try, max_depth, min_split):
    """Grow one tree on the (possibly repeated) sample indices ``idx``.

    ``keys[node_id]`` orders the candidate features at that node; at least
    ``m_try`` features are examined and the search continues past them only
    while no valid split has been found. Ties are broken by lowest feature
    index, then lowest threshold.
    """
    n = idx.shape[0]
    d = X.shape[1]
    cap = 2 * n + 1
    feature = np.full(cap, -1, dtype=np.int64)
    threshold = np.zeros(cap)
    left = np.full(cap, -1, dtype=np.int64)
    right = np.full(cap, -1, dtype=np.int64)
    value = np.zeros(cap)
    n_node = np.zeros(cap, dtype=np.int64)
    importance = np.zeros(d)
    work = idx.copy()
    scratch_v = np.empty(n)
    scratch_y = np.empty(n, dtype=np.int64)

    # stack entries: start, end, depth, parent, is_right
    stack = np.empty((cap, 5), dtype=np.int64)
    top = 0
    stack[0, 0] = 0
    stack[0, 1] = n
    stack[0, 2] = 0
    stack[0, 3] = -1
    stack[0, 4] = 0
    top = 1
    count = 0
    while top > 0:
        top -= 1
        start = stack[top, 0]
        end = stack[top, 1]
        depth = stack[top, 2]
        parent = stack[top, 3]
        node = count
        count += 1
        if parent >= 0:
            if stack[top, 4] == 1:
                right[parent] = node
            else:
                left[parent] = node
        m = end - start
        pos = 0
        for k in range(start, end):
            pos += y[work[k]]
        n_node[node] = m
        value[node] = pos / m
        if pos == 0 or pos == m or m < min_split or (max_depth >= 0 and depth >= max_depth):
            continue
        order = np.argsort(keys[node], kind="mergesort")
        best_imp = np.inf
        best_f = -1
        best_thr = 0.0
        examined = 0
        for oi in range(d):
            if examined >= m_try and best_f >= 0:
                break
            f = order[oi]
            examined += 1
            imp, thr, valid = _best_split_on(X, y, work, start, end, f, scratch_v, scratch_y)
            if not valid:
                continue
            if (imp < best_imp or (imp == best_imp and (f < best_f or (f == best_f and thr < best_thr)))):
                best_imp = imp
                best_f = f
                best_thr = thr
        if best_f < 0:
            continue
        # partition work[start:end] so that x <= thr comes first
        i = start
        j = end - 1
        while i <= j:
            if X[work[i], best_f] <= best_thr:
                i += 1
            else:
                tmp = work[i]
                work[i] = work[j]
                work[j] = tmp
                j -= 1
        mid = i
        feature[node] = best_f
        threshold[node] = best_thr
        parent_imp = _gini(m, pos)
        importance[best_f] += (m * parent_imp - m * best_imp) / n
        # push right first so the left child gets the next id (preorder)
        stack[top, 0] = mid
        stack[top, 1] = end
        stack[top, 2] = depth + 1
        stack[top, 3] = node
        stack[top, 4] = 1
        top += 1
        stack[top, 0] = start
        stack[top, 1] = mid
        stack[top, 2] = depth + 1
        stack[top, 3] = node
        stack[top, 4] = 0
        top += 1
    return (feature[:count].copy(), threshold[:count].copy(), left[:count].copy(),
            right[:count].copy(), value[:count].copy(), n_node[:count].copy(), importance)


@numba.njit(cache=True)
def predict_tree(feature, threshold, left, right, value, X):
    out = np.empty(X.shape[0])
    for r in range(X.shape[0]):
        node = 0
        while feature[node] >= 0:
            if X[r, feature[node]] <= threshold[node]:
                node = left[node]
            else:
                node = right[node]
        out[r] = value[node]
    return out


@dataclass(frozen=True, eq=False)
class Tree:
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray
    n_node: np.ndarray
    importance: np.ndarray

    def predict(self, X: np.ndarray) -> np.ndarray:
        return predict_tree(self.feature, self.threshold, self.left, self.right, self.value,
                            np.ascontiguousarray(X, dtype=np.float64))

    def to_json(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
            "n_node": self.n_node.tolist(),
            "importance": self.importance.tolist(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "Tree":
        ints = ("feature", "left", "right", "n_node")
        return cls(**{k: np.asarray(v, dtype=np.int64 if k in ints else np.float64) for k, v in d.items()})


def fit_tree(X, y, idx, keys, m_try: int, max_depth: int | None, min_split: int) -> Tree:
    arrays = build_tree(
        np.ascontiguousarray(X, dtype=np.float64),
        np.ascontiguousarray(y, dtype=np.int64),
        np.ascontiguousarray(idx, dtype=np.int64),
        np.ascontiguousarray(keys, dtype=np.float64),
        int(m_try),
        -1 if max_depth is None else int(max_depth),
        int(min_split),
    )
    return Tree(*arrays)


def index_keys(n_samples: int, d: int) -> np.ndarray:
    """Keys that make every node scan features in index order (plain CART)."""
    return np.tile(np.arange(d, dtype=np.float64), (2 * n_samples + 1, 1))
