//! Small hand-built graphs used by tests, examples and the CLI demos.

use alloc::vec::Vec;

use crate::{Graph, Partition};

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;
pub const E: usize = 4;
pub const F: usize = 5;

/// Triangles {a,b,c} and {d,e,f} joined by the bridge c–d, with the natural
/// two-community partition.
pub fn two_triangles() -> (Graph, Partition) {
    let g = Graph::from_edges(6, &[(A, B), (B, C), (A, C), (D, E), (E, F), (D, F), (C, D)])
        .expect("valid fixture");
    (g, Partition::from_assignment(&[0, 0, 0, 1, 1, 1]))
}

/// Star with node 0 at the center.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid fixture")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid fixture")
}

pub fn clique(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges).expect("valid fixture")
}

/// Two `k`-cliques on `0..k` and `k..2k` joined by the edge `(k-1, k)`.
pub fn two_cliques(k: usize) -> (Graph, Partition) {
    let mut edges: Vec<_> = Vec::new();
    for offset in [0, k] {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((offset + i, offset + j));
            }
        }
    }
    edges.push((k - 1, k));
    let g = Graph::from_edges(2 * k, &edges).expect("valid fixture");
    let labels: Vec<usize> = (0..2 * k).map(|i| i / k).collect();
    (g, Partition::from_assignment(&labels))
}

/// Node `n{i}` of the five-community toy network is index `i - 1`.
pub const fn toy(name: usize) -> usize {
    name - 1
}

/// A 24-node, five-community network encoding the textual facts of the
/// classic community-bridge toy example:
///
/// * C1 = n1..n8 is the largest community; its bridges are n5, n2 and n4, and
///   its interconnection density is 1.225 / 8 ≈ 0.153.
/// * n5 reaches three external communities (C2, C3, C4); n10 in C2 has the
///   same internal and external degree (3 and 3) with all its external links
///   into C1.
/// * n12 reaches C3 through a single link; n6 (C1) and n16 (C3) both have four
///   internal links.
/// * C1 ∪ C2 hold 12 nodes, C1..C4 hold 20 of the 24.
pub fn toy_network() -> (Graph, Partition) {
    const EDGES: &[(usize, usize)] = &[
        // C1 = n1..n8
        (4, 1), (4, 2), (4, 3), (4, 5), (4, 6), (4, 7), (4, 8),
        (5, 6), (5, 3), (2, 1), (6, 7), (6, 8), (7, 8),
        // C2 = n9..n12
        (9, 10), (10, 11), (10, 12), (9, 11), (11, 12),
        // C3 = n13..n17
        (16, 13), (16, 14), (16, 15), (16, 17), (13, 14), (15, 17),
        // C4 = n18..n20
        (18, 19), (19, 20), (18, 20),
        // C5 = n21..n24
        (21, 22), (21, 23), (21, 24), (22, 23), (22, 24), (23, 24),
        // inter-community links
        (5, 10), (5, 13), (5, 18),
        (2, 10), (2, 9), (2, 11),
        (4, 10),
        (12, 14),
        (15, 21),
        (20, 22),
    ];
    let edges: Vec<_> = EDGES.iter().map(|&(u, v)| (toy(u), toy(v))).collect();
    let g = Graph::from_edges(24, &edges).expect("valid fixture");
    let labels: Vec<usize> = (1..=24)
        .map(|name| match name {
            1..=8 => 1,
            9..=12 => 2,
            13..=17 => 3,
            18..=20 => 4,
            _ => 5,
        })
        .collect();
    let labels_named: Vec<_> = (1..=24).map(|i| alloc::format!("n{i}")).collect();
    (g.with_labels(labels_named).expect("24 labels"), Partition::from_assignment(&labels))
}
