"""Logistic regression (Newton) and a linear SVM (primal subgradient descent)."""

from __future__ import annotations

import numba
import numpy as np


def _log1pexp(z):
    return np.logaddexp(0.0, z)


def sigmoid(z):
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def lr_objective(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float) -> float:
    """Sum of log-losses plus (l2/2)*||w||^2; the bias is not penalised."""
    z = X @ w + b
    return float(np.sum(_log1pexp(z) - y * z) + 0.5 * l2 * (w @ w))


def lr_gradient(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float):
    r = sigmoid(X @ w + b) - y
    return X.T @ r + l2 * w, float(r.sum())


def fit_logistic(X, y, l2: float, tol: float, max_iter: int):
    """Newton's method with backtracking. Returns (w, b, converged, iterations)."""
    n, d = X.shape
    A = np.hstack([X, np.ones((n, 1))])
    reg = np.full(d + 1, l2)
    reg[-1] = 0.0
    theta = np.zeros(d + 1)
    yf = y.astype(np.float64)

    def obj(t):
        return lr_objective(t[:-1], t[-1], X, yf, l2)

    f = obj(theta)
    for it in range(1, max_iter + 1):
        p = sigmoid(A @ theta)
        g = A.T @ (p - yf) + reg * theta
        if np.linalg.norm(g) <= tol:
            return theta[:-1], float(theta[-1]), True, it - 1
        H = (A * (p * (1.0 - p))[:, None]).T @ A + np.diag(reg)
        H[np.diag_indices_from(H)] += 1e-12
        try:
            step = np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(H, g, rcond=None)[0]
        t = 1.0
        while True:
            cand = theta - t * step
            fc = obj(cand)
            if fc <= f - 1e-4 * t * (g @ step) or t < 1e-10:
                break
            t *= 0.5
        theta, f = cand, fc
    p = sigmoid(A @ theta)
    g = A.T @ (p - yf) + reg * theta
    return theta[:-1], float(theta[-1]), bool(np.linalg.norm(g) <= tol), max_iter


def svm_objective(w: np.ndarray, b: float, X: np.ndarray, s: np.ndarray, c: float) -> float:
    """0.5*(||w||^2 + b^2) + C * sum(hinge); ``s`` holds labels in {-1, +1}."""
    margins = s * (X @ w + b)
    return float(0.5 * (w @ w + b * b) + c * np.maximum(0.0, 1.0 - margins).sum())


@numba.njit(cache=True)
def _svm_descent(X, s, c, max_iter, every):
    n, d = X.shape
    lam = 1.0 / (c * n)
    radius = 1.0 / np.sqrt(lam)
    w = np.zeros(d + 1)  # last entry is the bias, penalised like a weight
    best = w.copy()
    best_obj = np.inf
    n_ck = max_iter // every + 1
    checkpoints = np.empty(n_ck)
    k = 0
    grad = np.empty(d + 1)
    for t in range(1, max_iter + 1):
        hinge = 0.0
        for j in range(d + 1):
            grad[j] = 0.0
        for i in range(n):
            z = w[d]
            for j in range(d):
                z += w[j] * X[i, j]
            m = s[i] * z
            if m < 1.0:
                hinge += 1.0 - m
                for j in range(d):
                    grad[j] -= s[i] * X[i, j]
                grad[d] -= s[i]
        sq = 0.0
        for j in range(d + 1):
            sq += w[j] * w[j]
        obj = 0.5 * sq + c * hinge
        if obj < best_obj:
            best_obj = obj
            best[:] = w
        if t % every == 0:
            checkpoints[k] = best_obj
            k += 1
        # step on (lam/2)||w||^2 + mean hinge, i.e. the objective divided by C*n
        eta = 1.0 / (lam * t)
        norm = 0.0
        for j in range(d + 1):
            w[j] = (1.0 - eta * lam) * w[j] - eta * grad[j] / n
            norm += w[j] * w[j]
        norm = np.sqrt(norm)
        if norm > radius:
            for j in range(d + 1):
                w[j] *= radius / norm
    # the final iterate is scored too
    z_obj = 0.0
    for i in range(n):
        z = w[d]
        for j in range(d):
            z += w[j] * X[i, j]
        m = s[i] * z
        if m < 1.0:
            z_obj += 1.0 - m
    sq = 0.0
    for j in range(d + 1):
        sq += w[j] * w[j]
    if 0.5 * sq + c * z_obj < best_obj:
        best_obj = 0.5 * sq + c * z_obj
        best[:] = w
    return best, best_obj, checkpoints[:k].copy()


def fit_linear_svm(X, y, c: float, max_iter: int, checkpoint_every: int = 100):
    """Returns (w, b, best objective, best-so-far objective at each checkpoint)."""
    s = np.where(np.asarray(y) == 1, 1.0, -1.0)
    every = max(1, min(checkpoint_every, max_iter))
    theta, obj, ck = _svm_descent(np.ascontiguousarray(X, dtype=np.float64), s, float(c),
                                  int(max_iter), int(every))
    return theta[:-1].copy(), float(theta[-1]), float(obj), ck
