use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::cone::VertexCone;
use super::hrep::{facets_from_vertices, HRepresentation};
use super::vector::{primitive_direction, RationalVector};
use crate::error::{Error, Result};
use crate::exact::linalg::rank;
use crate::exact::rational::{denominator_lcm, format_rational, parse_rational};

/// Full-dimensional simple rational polytope given by its vertices.
///
/// Construction derives the facets, checks simplicity, and builds one
/// [`VertexCone`] per vertex. The value is immutable afterwards.
#[derive(Clone, Debug)]
pub struct Polytope {
    dimension: usize,
    vertices: Vec<RationalVector>,
    adjacency: Vec<Vec<usize>>,
    facets: HRepresentation,
    denominator: BigInt,
    cones: Vec<VertexCone>,
}

impl Polytope {
    /// Build from vertices, deriving adjacency from the facets.
    pub fn new(vertices: Vec<RationalVector>) -> Result<Self> {
        Self::build(vertices, None)
    }

    /// Build from vertices with explicit 0-based edges.
    pub fn with_edges(vertices: Vec<RationalVector>, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(vertices, Some(edges))
    }

    fn build(vertices: Vec<RationalVector>, edges: Option<&[(usize, usize)]>) -> Result<Self> {
        let d = vertices.first().map_or(0, Vec::len);
        if d == 0 {
            return Err(Error::Input("polytope needs at least one coordinate".into()));
        }
        if vertices.iter().any(|v| v.len() != d) {
            return Err(Error::Input("vertices have mixed dimensions".into()));
        }
        let distinct: BTreeSet<&RationalVector> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Input("duplicate vertex".into()));
        }
        let facets = facets_from_vertices(&vertices, d)?;
        for (i, v) in vertices.iter().enumerate() {
            let tight = facets.tight_at(v);
            let normals: Vec<RationalVector> = tight
                .iter()
                .map(|&f| {
                    facets.inequalities[f]
                        .normal
                        .iter()
                        .cloned()
                        .map(BigRational::from_integer)
                        .collect()
                })
                .collect();
            if normals.is_empty() || rank(&normals) < d {
                return Err(Error::Input(format!("point {i} is not a vertex of the hull")));
            }
            if tight.len() != d {
                return Err(Error::NotSimple(format!(
                    "vertex {i} lies on {} facets, expected {d}",
                    tight.len()
                )));
            }
        }
        let adjacency = match edges {
            Some(e) => adjacency_from_edges(&vertices, &facets, e)?,
            None => derive_adjacency(&vertices, &facets)?,
        };
        let cones = build_cones(&vertices, &adjacency)?;
        let denominator = denominator_lcm(vertices.iter().flatten());
        Ok(Self {
            dimension: d,
            vertices,
            adjacency,
            facets,
            denominator,
            cones,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn facets(&self) -> &HRepresentation {
        &self.facets
    }

    /// lcm of all vertex-coordinate denominators.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn cones(&self) -> &[VertexCone] {
        &self.cones
    }

    /// Every primitive edge vector, once per (vertex, edge) pair.
    pub fn edge_directions(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.cones.iter().flat_map(|c| c.edges().iter())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolytopeFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("polytope json: {e}")))?;
        file.into_polytope()
    }

    pub fn to_file(&self) -> PolytopeFile {
        let mut edges = Vec::new();
        for (i, ns) in self.adjacency.iter().enumerate() {
            for &j in ns {
                if i < j {
                    edges.push([i, j]);
                }
            }
        }
        PolytopeFile {
            dimension: self.dimension,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| Coordinate::Text(format_rational(x))).collect())
                .collect(),
            edges: Some(edges),
        }
    }
}

/// On-disk polytope description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dimension: usize,
    pub vertices: Vec<Vec<Coordinate>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

/// A vertex coordinate: `"p/q"` string or a plain JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Integer(i64),
    Text(String),
}

impl PolytopeFile {
    pub fn into_polytope(self) -> Result<Polytope> {
        let vertices: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| match c {
                        Coordinate::Integer(n) => Ok(BigRational::from_integer((*n).into())),
                        Coordinate::Text(s) => parse_rational(s),
                    })
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        if vertices.iter().any(|v| v.len() != self.dimension) {
            return Err(Error::Input(format!(
                "every vertex must have {} coordinates",
                self.dimension
            )));
        }
        match self.edges {
            Some(e) => {
                let e: Vec<(usize, usize)> = e.into_iter().map(|[a, b]| (a, b)).collect();
                Polytope::with_edges(vertices, &e)
            }
            None => Polytope::new(vertices),
        }
    }
}

fn shared_facets(facets: &HRepresentation, a: &RationalVector, b: &RationalVector) -> usize {
    facets
        .inequalities
        .iter()
        .filter(|f| f.is_tight(a) && f.is_tight(b))
        .count()
}

fn derive_adjacency(vertices: &[RationalVector], facets: &HRepresentation) -> Result<Vec<Vec<usize>>> {
    let d = vertices[0].len();
    let n = vertices.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if shared_facets(facets, &vertices[i], &vertices[j]) == d - 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    check_degrees(&adj, d)?;
    Ok(adj)
}

/// Per-vertex neighbour lists (ascending) for a polytope whose facets are
/// known: two vertices are adjacent iff they share `d - 1` tight facets.
pub fn adjacency_from_facets(polytope: &Polytope) -> Result<Vec<Vec<usize>>> {
    derive_adjacency(polytope.vertices(), polytope.facets())
}

fn check_degrees(adj: &[Vec<usize>], d: usize) -> Result<()> {
    for (i, ns) in adj.iter().enumerate() {
        if ns.len() != d {
            return Err(Error::NotSimple(format!(
                "vertex {i} has {} neighbours, expected {d}",
                ns.len()
            )));
        }
    }
    Ok(())
}

fn adjacency_from_edges(
    vertices: &[RationalVector],
    facets: &HRepresentation,
    edges: &[(usize, usize)],
) -> Result<Vec<Vec<usize>>> {
    let d = vertices[0].len();
    let n = vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(Error::Input(format!("bad edge [{a}, {b}]")));
        }
        if shared_facets(facets, &vertices[a], &vertices[b]) != d - 1 {
            return Err(Error::Input(format!("[{a}, {b}] is not an edge of the hull")));
        }
        if !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for ns in adj.iter_mut() {
        ns.sort_unstable();
    }
    check_degrees(&adj, d)?;
    Ok(adj)
}

fn build_cones(vertices: &[RationalVector], adjacency: &[Vec<usize>]) -> Result<Vec<VertexCone>> {
    vertices
        .iter()
        .zip(adjacency)
        .map(|(v, ns)| {
            let edges = ns
                .iter()
                .map(|&u| {
                    let diff: RationalVector =
                        vertices[u].iter().zip(v).map(|(a, b)| a - b).collect();
                    primitive_direction(&diff)
                })
                .collect::<Result<Vec<_>>>()?;
            VertexCone::new(v.clone(), edges)
        })
        .collect()
}

/// Vertex cones of an already validated polytope.
pub fn build_vertex_cones(polytope: &Polytope) -> Result<Vec<VertexCone>> {
    build_cones(polytope.vertices(), polytope.adjacency())
}
