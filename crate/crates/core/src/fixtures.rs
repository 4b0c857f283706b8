//! Named example graphs used throughout the docs and tests.

use crate::graph::{Graph, Mode, Orientation, Sign, SignedGraph};

use Sign::{Minus, Plus};

/// The running four-vertex example: edges `e1..e5` are
/// `12+, 23-, 34+, 14+, 13-`.
pub fn sigma4() -> SignedGraph {
    SignedGraph::simple(
        4,
        [
            (1, 2, Plus),
            (2, 3, Minus),
            (3, 4, Plus),
            (1, 4, Plus),
            (1, 3, Minus),
        ],
    )
    .expect("valid graph")
}

/// The orientation of [`sigma4`] whose incidence matrix is
///
/// ```text
/// -1  0  0 -1 -1
///  1  1  0  0  0
///  0  1  1  0 -1
///  0  0 -1  1  0
/// ```
pub fn sigma4_orientation() -> Orientation {
    Orientation::new(
        &sigma4(),
        vec![
            (Minus, Plus),
            (Plus, Plus),
            (Plus, Minus),
            (Minus, Plus),
            (Minus, Minus),
        ],
    )
    .expect("consistent orientation")
}

/// [`sigma4`] with the pair `34` removed and a negative edge added parallel
/// to the positive edge `12`; the two cancel in the adjacency matrix.
pub fn sigma4_digon() -> SignedGraph {
    SignedGraph::new(
        4,
        Mode::SimplySigned,
        [
            (1, 2, Plus),
            (1, 2, Minus),
            (2, 3, Minus),
            (1, 4, Plus),
            (1, 3, Minus),
        ],
    )
    .expect("valid graph")
}

/// A simply signed graph on five vertices with one digon at `12`, whose
/// reduced line graph has a claw and hence is not a line graph.
pub fn sigma5() -> SignedGraph {
    SignedGraph::new(
        5,
        Mode::SimplySigned,
        [
            (1, 2, Plus),
            (1, 2, Minus),
            (1, 3, Plus),
            (2, 4, Minus),
            (2, 5, Plus),
            (4, 5, Plus),
        ],
    )
    .expect("valid graph")
}

/// `-K3` with one negative digon attached at vertex 2 and two at vertex 3.
pub fn neg_k3_with_digons() -> SignedGraph {
    crate::linegraph::with_negative_digons(&Graph::complete(3), &[0, 1, 2])
        .expect("valid digon counts")
}
