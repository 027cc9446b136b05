"""Geometry helpers for unit spheres embedded in R^{2n}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIT_NORM_TOL = 1e-12


@dataclass(frozen=True)
class SpherePoint:
    """A point on S^{2n-1}, stored as its unit coordinate vector in R^{2n}."""

    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=float)
        object.__setattr__(self, "coords", coords)
        if coords.ndim != 1 or coords.size == 0 or coords.size % 2 != 0:
            raise ValueError(f"coordinates must form a vector of even length, got shape {coords.shape}")
        norm = np.linalg.norm(coords)
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise ValueError(f"point is off the sphere: norm {norm}")

    @property
    def dim(self) -> int:
        return self.coords.size


def _coords(a) -> np.ndarray:
    return a.coords if isinstance(a, SpherePoint) else np.asarray(a, dtype=float)


def sample_sphere(dim: int, count: int, seed: int) -> np.ndarray:
    """``count`` unit vectors in R^dim, rows of the result; deterministic in seed.

    Normalized standard Gaussians, so the distribution is rotation invariant.
    """
    if dim < 2 or dim % 2 != 0:
        raise ValueError(f"dimension must be even and at least 2, got {dim}")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((count, dim))
    points /= np.linalg.norm(points, axis=1, keepdims=True)
    return points


def random_sphere_point(dim: int, seed: int) -> SpherePoint:
    """One uniformly random point of S^(dim-1), deterministic in the seed."""
    return SpherePoint(sample_sphere(dim, 1, seed)[0])


def project_tangent(a, x) -> np.ndarray:
    """Orthogonal projection of x onto the tangent space at a: x - <x,a> a."""
    av = _coords(a)
    xv = np.asarray(x, dtype=float)
    if av.shape != xv.shape:
        raise ValueError(f"length mismatch: point has {av.size}, vector has {xv.size}")
    return xv - (xv @ av) * av


def tangent_basis(a) -> np.ndarray:
    """An orthonormal basis of the tangent space at a, rows of a (d-1) x d array.

    Gram-Schmidt on the standard basis vectors, dropping the coordinate where
    |a_i| is largest so the remaining directions stay well separated from a.
    One reorthogonalization pass keeps the basis orthonormal to ~1e-15.
    """
    av = _coords(a)
    d = av.size
    pivot = int(np.argmax(np.abs(av)))
    basis: list[np.ndarray] = []
    for j in range(d):
        if j == pivot:
            continue
        v = np.zeros(d)
        v[j] = 1.0
        for _ in range(2):
            v -= (v @ av) * av
            for b in basis:
                v -= (v @ b) * b
        v /= np.linalg.norm(v)
        basis.append(v)
    return np.array(basis)
