//! Mesh-derived operators: normals, boundary detection, incidence matrix and
//! the combinatorial graph Laplacian.

use super::{GeometryError, TriangleMesh};
use nalgebra::{DMatrix, Vector3};
use std::collections::{BTreeMap, BTreeSet};

/// Minimal triplet-form sparse matrix; enough for the edge incidence operator
/// and its products.
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    /// (row, col, value), sorted by (row, col).
    triplets: Vec<(usize, usize, f64)>,
}

impl SparseMatrix {
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        mut triplets: Vec<(usize, usize, f64)>,
    ) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        Self {
            nrows,
            ncols,
            triplets,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn triplets(&self) -> &[(usize, usize, f64)] {
        &self.triplets
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.nrows, self.ncols);
        for &(i, j, v) in &self.triplets {
            m[(i, j)] += v;
        }
        m
    }

    /// `self^T * self` as a dense matrix.
    pub fn transpose_times_self(&self) -> DMatrix<f64> {
        let mut rows: BTreeMap<usize, Vec<(usize, f64)>> = BTreeMap::new();
        for &(i, j, v) in &self.triplets {
            rows.entry(i).or_default().push((j, v));
        }
        let mut out = DMatrix::zeros(self.ncols, self.ncols);
        for entries in rows.values() {
            for &(a, va) in entries {
                for &(b, vb) in entries {
                    out[(a, b)] += va * vb;
                }
            }
        }
        out
    }
}

/// Edge incidence matrix `B` (one row per undirected edge `(i, j)` with
/// `i < j`: `+1` at column `i`, `-1` at column `j`). Edges come from
/// [`TriangleMesh::edges`], so the row order is deterministic.
pub fn incidence_matrix(mesh: &TriangleMesh) -> SparseMatrix {
    let mut triplets = Vec::with_capacity(mesh.edges().len() * 2);
    for (r, e) in mesh.edges().iter().enumerate() {
        triplets.push((r, e[0], 1.0));
        triplets.push((r, e[1], -1.0));
    }
    SparseMatrix::from_triplets(mesh.edges().len(), mesh.vertices().len(), triplets)
}

/// Combinatorial graph Laplacian `L = B^T B` (unweighted), assembled directly
/// from the edge list.
pub fn graph_laplacian(mesh: &TriangleMesh) -> DMatrix<f64> {
    let n = mesh.vertices().len();
    let mut l = DMatrix::zeros(n, n);
    for e in mesh.edges() {
        let (i, j) = (e[0], e[1]);
        l[(i, i)] += 1.0;
        l[(j, j)] += 1.0;
        l[(i, j)] -= 1.0;
        l[(j, i)] -= 1.0;
    }
    l
}

/// Area-weighted vertex normals. A vertex that accumulates no area (e.g. it
/// belongs to no triangle) gets `None`.
pub fn vertex_normals(mesh: &TriangleMesh) -> Result<Vec<Option<Vector3<f64>>>, GeometryError> {
    if mesh.vertices().dim() != 3 {
        return Err(GeometryError::UnsupportedDimension(mesh.vertices().dim()));
    }
    if mesh.triangles().is_empty() {
        return Err(GeometryError::NeedsTriangles("vertex normals"));
    }
    let pts = mesh.vertices();
    let v3 = |i: usize| Vector3::new(pts.coords()[(i, 0)], pts.coords()[(i, 1)], pts.coords()[(i, 2)]);
    let mut acc = vec![Vector3::zeros(); pts.len()];
    for tri in mesh.triangles() {
        let (a, b, c) = (v3(tri[0]), v3(tri[1]), v3(tri[2]));
        // Cross product length = 2 * area, so this is the area weighting.
        let n = (b - a).cross(&(c - a));
        for &v in tri {
            acc[v] += n;
        }
    }
    Ok(acc
        .into_iter()
        .map(|n| {
            let len = n.norm();
            if len > 1e-300 {
                Some(n / len)
            } else {
                None
            }
        })
        .collect())
}

/// Vertices lying on an edge used by exactly one triangle.
pub fn boundary_vertices(mesh: &TriangleMesh) -> BTreeSet<usize> {
    boundary_edges(mesh)
        .into_iter()
        .flat_map(|e| [e[0], e[1]])
        .collect()
}

/// Undirected edges used by exactly one triangle, in (min, max) order.
pub fn boundary_edges(mesh: &TriangleMesh) -> Vec<[usize; 2]> {
    let mut counts: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for tri in mesh.triangles() {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
            *counts.entry([a.min(b), a.max(b)]).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .filter_map(|(e, c)| (c == 1).then_some(e))
        .collect()
}

/// Connected components over the edge graph; each component is the sorted
/// list of its vertex indices. Isolated vertices form singleton components.
pub fn connected_components(mesh: &TriangleMesh) -> Vec<Vec<usize>> {
    let n = mesh.vertices().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for e in mesh.edges() {
        let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    groups.into_values().collect()
}
