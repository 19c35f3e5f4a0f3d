//! Small triangulations used as test inputs and shipped as example files.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;

fn build(facets: Vec<Vec<usize>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets).expect("corpus facets are well formed")
}

pub fn point() -> SimplicialComplex {
    SimplicialComplex::simplex(0)
}

pub fn closed_segment() -> SimplicialComplex {
    SimplicialComplex::simplex(1)
}

pub fn closed_triangle() -> SimplicialComplex {
    SimplicialComplex::simplex(2)
}

/// Boundary of the `(n+1)`-simplex.
pub fn sphere(n: usize) -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(n + 1)
}

/// Circle with a diameter. Junctions are vertices 0 and 1; 2, 3, 4 are the
/// midpoints of the upper arc, the lower arc and the diameter.
pub fn theta() -> SimplicialComplex {
    build(vec![vec![0, 2], vec![2, 1], vec![0, 3], vec![3, 1], vec![0, 4], vec![4, 1]])
}

/// Seven-vertex torus.
pub fn torus() -> SimplicialComplex {
    build(
        (0..7)
            .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
            .collect(),
    )
}

/// Six-vertex real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    build(vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ])
}

/// Klein bottle from a 4×4 grid whose first and last columns are glued with a flip.
pub fn klein_bottle() -> SimplicialComplex {
    twisted_grid(4, 4, true)
}

fn twisted_grid(m: usize, n: usize, flip: bool) -> SimplicialComplex {
    let id = |i: usize, j: usize| -> usize {
        if i == m {
            if flip {
                (n - j % n) % n
            } else {
                j % n
            }
        } else {
            i * n + j % n
        }
    };
    let mut facets = Vec::new();
    for i in 0..m {
        for j in 0..n {
            facets.push(vec![id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            facets.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
        }
    }
    build(facets)
}

/// The square `[-2, 2]²` triangulated on the integer grid, with the
/// coordinate axes as subcomplexes. Stands in for the plane near the origin.
#[derive(Debug, Clone)]
pub struct SquareWindow {
    pub complex: SimplicialComplex,
}

impl SquareWindow {
    pub const RADIUS: i64 = 2;

    pub fn new() -> Self {
        let mut facets = Vec::new();
        for y in -Self::RADIUS..Self::RADIUS {
            for x in -Self::RADIUS..Self::RADIUS {
                let (a, b, c, d) = (
                    Self::vertex_at(x, y),
                    Self::vertex_at(x + 1, y),
                    Self::vertex_at(x, y + 1),
                    Self::vertex_at(x + 1, y + 1),
                );
                facets.push(vec![a, b, d]);
                facets.push(vec![a, c, d]);
            }
        }
        SquareWindow { complex: build(facets) }
    }

    pub fn vertex_at(x: i64, y: i64) -> usize {
        let w = 2 * Self::RADIUS + 1;
        ((y + Self::RADIUS) * w + (x + Self::RADIUS)) as usize
    }

    pub fn coordinates(v: usize) -> (i64, i64) {
        let w = 2 * Self::RADIUS + 1;
        let v = v as i64;
        (v % w - Self::RADIUS, v / w - Self::RADIUS)
    }

    /// Vertex label `x,y`.
    pub fn label(v: usize) -> String {
        let (x, y) = Self::coordinates(v);
        alloc::format!("{x},{y}")
    }

    pub fn origin() -> Simplex {
        Simplex::vertex(Self::vertex_at(0, 0))
    }

    fn select(&self, pred: impl Fn(i64, i64) -> bool) -> Vec<Simplex> {
        self.complex
            .simplices()
            .iter()
            .filter(|s| {
                s.vertices().iter().all(|v| {
                    let (x, y) = Self::coordinates(*v);
                    pred(x, y)
                })
            })
            .cloned()
            .collect()
    }

    /// Simplices of the closed quadrant `x ≥ 0, y ≥ 0`.
    pub fn quadrant(&self) -> Vec<Simplex> {
        self.select(|x, y| x >= 0 && y >= 0)
    }

    /// Simplices of the x-axis.
    pub fn x_axis(&self) -> Vec<Simplex> {
        self.select(|_, y| y == 0)
    }

    /// Open simplices of the positive x-axis (origin excluded).
    pub fn positive_x_axis(&self) -> Vec<Simplex> {
        let o = Self::origin();
        self.select(|x, y| y == 0 && x >= 0).into_iter().filter(|s| *s != o).collect()
    }

    /// Open simplices of the positive y-axis (origin excluded).
    pub fn positive_y_axis(&self) -> Vec<Simplex> {
        let o = Self::origin();
        self.select(|x, y| x == 0 && y >= 0).into_iter().filter(|s| *s != o).collect()
    }

    /// Open simplices containing the origin.
    pub fn origin_star(&self) -> Vec<Simplex> {
        let v = Self::vertex_at(0, 0);
        self.complex.simplices().iter().filter(|s| s.contains_vertex(v)).cloned().collect()
    }
}

impl Default for SquareWindow {
    fn default() -> Self {
        Self::new()
    }
}

/// Base spaces of the shipped corpus, by file stem.
pub fn base_spaces() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("theta", theta()),
        ("segment", closed_segment()),
        ("s1", sphere(1)),
        ("s2", sphere(2)),
        ("s3", sphere(3)),
        ("t2", torus()),
        ("klein", klein_bottle()),
        ("rp2_6", rp2_6()),
        ("square", SquareWindow::new().complex),
    ]
}

/// Base spaces plus the cone and suspension of each.
pub fn standard() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for (name, k) in base_spaces() {
        let (cone, susp) = (k.cone(), k.suspension());
        out.push((String::from(name), k));
        out.push((alloc::format!("cone_{name}"), cone));
        out.push((alloc::format!("susp_{name}"), susp));
    }
    out
}
