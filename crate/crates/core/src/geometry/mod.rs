//! Geometry containers, mesh I/O and mesh-derived operators.

mod decimate;
mod io;
mod mesh;
pub mod spatial;
mod transform;

pub use decimate::{decimate, decimate_points, farthest_point_order};
pub use io::{load_geometry, save_geometry, save_geometry_with_attribute, GeometryFormat};
pub use mesh::SparseMatrix;
pub use transform::{umeyama_align, SimilarityTransform};

use nalgebra::{DMatrix, DVector};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum GeometryError {
    #[error("point set is empty")]
    Empty,
    #[error("point dimension {0} is not supported (expected 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("non-finite coordinate at point {index}")]
    NonFinite { index: usize },
    #[error("triangle {triangle} references vertex {vertex} but the mesh has only {count} vertices")]
    IndexOutOfRange {
        triangle: usize,
        vertex: usize,
        count: usize,
    },
    #[error("triangle {0} is degenerate (repeated vertex index)")]
    DegenerateTriangle(usize),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("operation requires triangle connectivity: {0}")]
    NeedsTriangles(&'static str),
    #[error("alignment failed: {0}")]
    Alignment(String),
    #[error("decimation failed: {0}")]
    Decimation(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("landmark `{0}` is invalid: {1}")]
    Landmark(String, String),
}

/// An ordered set of `n` points in `d` dimensions (`d` in {2, 3}), stored as
/// the rows of an `n x d` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    coords: DMatrix<f64>,
}

impl PointSet {
    pub fn new(coords: DMatrix<f64>) -> Result<Self, GeometryError> {
        if coords.nrows() == 0 {
            return Err(GeometryError::Empty);
        }
        let d = coords.ncols();
        if d != 2 && d != 3 {
            return Err(GeometryError::UnsupportedDimension(d));
        }
        for i in 0..coords.nrows() {
            if coords.row(i).iter().any(|v| !v.is_finite()) {
                return Err(GeometryError::NonFinite { index: i });
            }
        }
        Ok(Self { coords })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, GeometryError> {
        if rows.is_empty() {
            return Err(GeometryError::Empty);
        }
        let d = rows[0].len();
        if d != 2 && d != 3 {
            return Err(GeometryError::UnsupportedDimension(d));
        }
        let mut m = DMatrix::zeros(rows.len(), d);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(GeometryError::UnsupportedDimension(r.len()));
            }
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        Self::new(m)
    }

    pub fn len(&self) -> usize {
        self.coords.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.nrows() == 0
    }

    pub fn dim(&self) -> usize {
        self.coords.ncols()
    }

    pub fn coords(&self) -> &DMatrix<f64> {
        &self.coords
    }

    pub fn point(&self, i: usize) -> DVector<f64> {
        self.coords.row(i).transpose()
    }

    /// Axis-aligned bounding box as (min, max) corner vectors.
    pub fn bounding_box(&self) -> (DVector<f64>, DVector<f64>) {
        let d = self.dim();
        let mut lo = DVector::from_element(d, f64::INFINITY);
        let mut hi = DVector::from_element(d, f64::NEG_INFINITY);
        for i in 0..self.len() {
            for j in 0..d {
                lo[j] = lo[j].min(self.coords[(i, j)]);
                hi[j] = hi[j].max(self.coords[(i, j)]);
            }
        }
        (lo, hi)
    }

    pub fn bounding_box_diagonal(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        (hi - lo).norm()
    }

    /// Index of the point nearest to `query` (linear scan).
    pub fn nearest_index(&self, query: &DVector<f64>) -> usize {
        let mut best = 0;
        let mut best_d2 = f64::INFINITY;
        for i in 0..self.len() {
            let d2 = (self.point(i) - query).norm_squared();
            if d2 < best_d2 {
                best_d2 = d2;
                best = i;
            }
        }
        best
    }

    pub fn translated(&self, field: &DeformationField) -> PointSet {
        PointSet {
            coords: &self.coords + field.vectors(),
        }
    }
}

/// A triangle mesh: vertices plus connectivity. The undirected edge list is
/// derived once at construction, deduplicated and sorted lexicographically by
/// (min, max) vertex index so downstream operators are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleMesh {
    vertices: PointSet,
    triangles: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
}

impl TriangleMesh {
    pub fn new(vertices: PointSet, triangles: Vec<[usize; 3]>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                if v >= n {
                    return Err(GeometryError::IndexOutOfRange {
                        triangle: t,
                        vertex: v,
                        count: n,
                    });
                }
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(GeometryError::DegenerateTriangle(t));
            }
        }
        let mut edges = BTreeSet::new();
        for tri in &triangles {
            for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
                edges.insert([a.min(b), a.max(b)]);
            }
        }
        Ok(Self {
            vertices,
            triangles,
            edges: edges.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> &PointSet {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Deduplicated undirected edges in (min, max) lexicographic order.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn with_vertices(&self, vertices: PointSet) -> Result<Self, GeometryError> {
        if vertices.len() != self.vertices.len() {
            return Err(GeometryError::Decimation(format!(
                "replacement vertex count {} != {}",
                vertices.len(),
                self.vertices.len()
            )));
        }
        Ok(Self {
            vertices,
            triangles: self.triangles.clone(),
            edges: self.edges.clone(),
        })
    }

    pub fn median_edge_length(&self) -> f64 {
        let mut lens: Vec<f64> = self
            .edges
            .iter()
            .map(|e| (self.vertices.point(e[0]) - self.vertices.point(e[1])).norm())
            .collect();
        if lens.is_empty() {
            return 0.0;
        }
        lens.sort_by(|a, b| a.total_cmp(b));
        lens[lens.len() / 2]
    }
}

/// Reference or target geometry: a mesh when connectivity is known, bare
/// points otherwise.
#[derive(Debug, Clone)]
pub enum Geometry {
    Mesh(TriangleMesh),
    Points(PointSet),
}

impl Geometry {
    pub fn points(&self) -> &PointSet {
        match self {
            Geometry::Mesh(m) => m.vertices(),
            Geometry::Points(p) => p,
        }
    }

    pub fn mesh(&self) -> Option<&TriangleMesh> {
        match self {
            Geometry::Mesh(m) => Some(m),
            Geometry::Points(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        self.points().len()
    }

    pub fn is_empty(&self) -> bool {
        self.points().is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points().dim()
    }

    /// Same connectivity, new vertex positions.
    pub fn with_points(&self, points: PointSet) -> Result<Geometry, GeometryError> {
        Ok(match self {
            Geometry::Mesh(m) => Geometry::Mesh(m.with_vertices(points)?),
            Geometry::Points(_) => Geometry::Points(points),
        })
    }
}

impl From<TriangleMesh> for Geometry {
    fn from(m: TriangleMesh) -> Self {
        Geometry::Mesh(m)
    }
}

impl From<PointSet> for Geometry {
    fn from(p: PointSet) -> Self {
        Geometry::Points(p)
    }
}

/// A named, noisy point annotation.
#[derive(Debug, Clone)]
pub struct Landmark {
    pub id: String,
    pub point: DVector<f64>,
    pub variance: f64,
}

impl Landmark {
    pub fn new(id: impl Into<String>, point: DVector<f64>, variance: f64) -> Result<Self, GeometryError> {
        let id = id.into();
        if id.is_empty() {
            return Err(GeometryError::Landmark(id, "empty id".into()));
        }
        if point.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::Landmark(id, "non-finite coordinate".into()));
        }
        if !(variance >= 0.0) {
            return Err(GeometryError::Landmark(id, "negative variance".into()));
        }
        Ok(Self { id, point, variance })
    }
}

/// Per-point displacement vectors aligned index-wise with a [`PointSet`],
/// stored as an `n x d` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationField {
    vectors: DMatrix<f64>,
}

impl DeformationField {
    pub fn new(vectors: DMatrix<f64>) -> Self {
        Self { vectors }
    }

    pub fn zeros(n: usize, d: usize) -> Self {
        Self {
            vectors: DMatrix::zeros(n, d),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.nrows() == 0
    }

    pub fn dim(&self) -> usize {
        self.vectors.ncols()
    }

    pub fn vectors(&self) -> &DMatrix<f64> {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> DVector<f64> {
        self.vectors.row(i).transpose()
    }

    pub fn is_finite(&self) -> bool {
        self.vectors.iter().all(|v| v.is_finite())
    }

    /// Mean Euclidean norm of the per-point vectors.
    pub fn mean_norm(&self) -> f64 {
        let n = self.len();
        if n == 0 {
            return 0.0;
        }
        (0..n).map(|i| self.vectors.row(i).norm()).sum::<f64>() / n as f64
    }
}

pub use mesh::{boundary_vertices, graph_laplacian, incidence_matrix, vertex_normals};

#[cfg(test)]
mod tests;
