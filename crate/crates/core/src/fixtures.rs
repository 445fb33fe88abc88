//! Named defining graphs and seeded random generators used by the test
//! suites, the `verify` command and the Python smoke test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DefiningGraph;
use crate::word::{NormalForm, Syllable, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two isolated `Z_2` vertices: the infinite dihedral group.
pub fn dihedral() -> DefiningGraph {
    DefiningGraph::with_cyclic(&[2, 2], &[]).unwrap()
}

/// A single edge of `Z_2`s: the Klein four-group.
pub fn klein() -> DefiningGraph {
    DefiningGraph::with_cyclic(&[2, 2], &[(0, 1)]).unwrap()
}

pub fn single(order: usize) -> DefiningGraph {
    DefiningGraph::with_cyclic(&[order], &[]).unwrap()
}

pub fn path(n: usize, order: usize) -> DefiningGraph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
    DefiningGraph::with_cyclic(&vec![order; n], &edges).unwrap()
}

pub fn cycle(n: usize, order: usize) -> DefiningGraph {
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    DefiningGraph::with_cyclic(&vec![order; n], &edges).unwrap()
}

/// `K_{1,k}` with the centre at vertex 0.
pub fn star(k: usize, order: usize) -> DefiningGraph {
    let edges: Vec<(u32, u32)> = (1..=k as u32).map(|i| (0, i)).collect();
    DefiningGraph::with_cyclic(&vec![order; k + 1], &edges).unwrap()
}

/// A random simplicial graph on `1..=max_vertices` vertices with cyclic groups of order `2..=max_order`.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_order: usize) -> DefiningGraph {
    let n = rng.gen_range(1..=max_vertices);
    let orders: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=max_order)).collect();
    let density = rng.gen_range(0.0..0.7);
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    DefiningGraph::with_cyclic(&orders, &edges).unwrap()
}

pub fn random_syllable(rng: &mut impl Rng, g: &DefiningGraph) -> Syllable {
    let v = rng.gen_range(0..g.vertex_count() as u32);
    let order = g.group(crate::graph::VertexId(v)).order() as u32;
    Syllable::new(v, rng.gen_range(1..order))
}

pub fn random_word(rng: &mut impl Rng, g: &DefiningGraph, len: usize) -> Word {
    Word((0..len).map(|_| random_syllable(rng, g)).collect())
}

pub fn random_element(rng: &mut impl Rng, g: &DefiningGraph, max_len: usize) -> NormalForm {
    let len = rng.gen_range(0..=max_len);
    NormalForm::from_syllables(random_word(rng, g, len).0, g)
}

/// Random element whose syllables all lie on the given vertices.
pub fn random_element_on(
    rng: &mut impl Rng,
    g: &DefiningGraph,
    vertices: &[crate::graph::VertexId],
    max_len: usize,
) -> NormalForm {
    if vertices.is_empty() {
        return NormalForm::identity();
    }
    let len = rng.gen_range(0..=max_len);
    let syllables = (0..len).map(|_| {
        let v = vertices[rng.gen_range(0..vertices.len())];
        let order = g.group(v).order() as u32;
        Syllable {
            vertex: v,
            elem: rng.gen_range(1..order),
        }
    });
    NormalForm::from_syllables(syllables.collect::<Vec<_>>(), g)
}

/// Looks up a built-in fixture by name.
pub fn by_name(name: &str) -> Option<DefiningGraph> {
    Some(match name {
        "dihedral" => dihedral(),
        "klein" => klein(),
        "z3" => single(3),
        "path3" => path(3, 2),
        "path4" => path(4, 2),
        "pentagon" => cycle(5, 2),
        "hexagon" => cycle(6, 2),
        "square-z3" => cycle(4, 3),
        "star3-z3" => star(3, 3),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &[
    "dihedral",
    "klein",
    "z3",
    "path3",
    "path4",
    "pentagon",
    "hexagon",
    "square-z3",
    "star3-z3",
];
