//! Named graphs: cycles, paths, complete graphs and the seven- and
//! eight-vertex graphs of the surface-subgroup classification.
//!
//! Most of the special graphs are specified through their opposite graphs,
//! which are the sparse pictures; the constructors below build the opposite
//! first and complement it. Vertex labels and their order follow the usual
//! drawings (`a, b, c, …`, then `t`, then primed copies).

use super::{default_labels, GraphError, Result, SimpleGraph};

/// Fixed names understood by [`named`], besides the families `C<m>`, `P<n>`,
/// `K<n>` and the `opp` suffix.
pub const NAMED_GRAPHS: &[&str] = &[
    "Lambda0", "Lambda1", "Lambda2", "Lambda3", "Lambda4", "Lambda5", "Lambda6", "Lambda7", "Lambda8", "Lambda9",
    "Lambda10", "Lambda11", "Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "P1_7", "P2_7", "Fig8",
];

fn from_opposite(labels: &[&str], opp_edges: &[(&str, &str)]) -> SimpleGraph {
    SimpleGraph::new(labels.iter().copied(), opp_edges).expect("catalog graphs are well formed").opposite()
}

pub fn cycle(m: usize) -> Result<SimpleGraph> {
    if m < 3 {
        return Err(GraphError::OutOfRange { what: "cycle length", value: m });
    }
    let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    edges.push((0, m - 1));
    SimpleGraph::from_index_edges(m, &edges)
}

pub fn path(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(GraphError::OutOfRange { what: "path length", value: n });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_index_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<SimpleGraph> {
    Ok(SimpleGraph::edgeless(default_labels(n))?.opposite())
}

const P6: [(&str, &str); 5] = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f")];

/// `(P3 ⊔ P3)^opp` on `a, b, c, e, f, g`.
pub fn lambda0() -> SimpleGraph {
    from_opposite(&["a", "b", "c", "e", "f", "g"], &[("a", "b"), ("b", "c"), ("e", "f"), ("f", "g")])
}

/// The graphs whose opposites are `P6` on `a..f` plus a vertex `t`.
pub fn lambda(i: usize) -> Result<SimpleGraph> {
    let t_nbrs: &[&str] = match i {
        0 => return Ok(lambda0()),
        1 => &["c", "d", "e", "f"],
        2 => &["a", "b"],
        3 => &["b"],
        4 => &["d", "e", "f"],
        5 => &["c", "d", "e"],
        6 => &["c", "e", "f"],
        7 => &["c", "d", "f"],
        8 => &["a", "c"],
        9 => &["b", "d"],
        10 => &["b", "c"],
        11 => &["c", "d"],
        _ => return Err(GraphError::OutOfRange { what: "Lambda index", value: i }),
    };
    let mut edges = P6.to_vec();
    edges.extend(t_nbrs.iter().map(|&v| (v, "t")));
    Ok(from_opposite(&["a", "b", "c", "d", "e", "f", "t"], &edges))
}

// The graphs whose opposites contain two crossing squares
// c-c'-e-e' (plus the chords c-e', c'-e).
const CROSSED: [(&str, &str); 4] = [("c", "c'"), ("e", "e'"), ("c'", "e"), ("c", "e'")];

pub fn phi(i: usize) -> Result<SimpleGraph> {
    let labels_8 = ["a", "b", "c", "e", "f", "g", "c'", "e'"];
    let g = match i {
        1 => from_opposite(
            &["a", "b", "c", "d", "e", "f", "g", "t"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "g"), ("d", "t")],
        ),
        2 => from_opposite(
            &["a", "b", "c", "d", "e", "f", "g", "d'"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("e", "f"),
                ("f", "g"),
                ("c", "d'"),
                ("d'", "e"),
                ("d", "d'"),
            ],
        ),
        3 => {
            let mut e = vec![("a", "b"), ("b", "c"), ("e", "f"), ("f", "g"), ("b", "c'"), ("e'", "f")];
            e.extend(CROSSED);
            from_opposite(&labels_8, &e)
        }
        4 => {
            let mut e = vec![("a", "b"), ("b", "c"), ("e", "f"), ("f", "g"), ("g", "e'"), ("c'", "b")];
            e.extend(CROSSED);
            from_opposite(&labels_8, &e)
        }
        5 => {
            let mut e = vec![("a", "b"), ("b", "c"), ("e", "f"), ("f", "g"), ("g", "e'"), ("c'", "a")];
            e.extend(CROSSED);
            from_opposite(&labels_8, &e)
        }
        _ => return Err(GraphError::OutOfRange { what: "Phi index", value: i }),
    };
    Ok(g)
}

/// `P1(7)`: its opposite is `Phi4`'s opposite with `a` removed.
pub fn p1_7() -> SimpleGraph {
    let mut e = vec![("b", "c"), ("e", "f"), ("f", "g"), ("g", "e'"), ("c'", "b")];
    e.extend(CROSSED);
    from_opposite(&["b", "c", "e", "f", "g", "c'", "e'"], &e)
}

/// `P2(7)`: its opposite is `Phi3`'s opposite with `g` removed.
pub fn p2_7() -> SimpleGraph {
    let mut e = vec![("a", "b"), ("b", "c"), ("e", "f"), ("b", "c'"), ("e'", "f")];
    e.extend(CROSSED);
    from_opposite(&["a", "b", "c", "e", "f", "c'", "e'"], &e)
}

/// Twelve-vertex weakly chordal graph whose opposite is `P6` on `a..f` with
/// a pendant vertex `x'` attached to every `x`.
pub fn fig8() -> SimpleGraph {
    let labels = ["a", "b", "c", "d", "e", "f", "a'", "b'", "c'", "d'", "e'", "f'"];
    let mut edges = P6.to_vec();
    edges.extend(labels[..6].iter().zip(&labels[6..]).map(|(&x, &y)| (x, y)));
    from_opposite(&labels, &edges)
}

fn family(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Look a graph up by name: `C5`, `P7opp`, `K4`, `Lambda3`, `Phi4`, `P1_7`,
/// `Fig8`, … A trailing `opp` takes the opposite graph.
pub fn named(name: &str) -> Result<SimpleGraph> {
    if let Some(base) = name.strip_suffix("opp").filter(|b| !b.is_empty()) {
        return Ok(named(base)?.opposite());
    }
    let unknown = || GraphError::UnknownName(name.to_string());
    match name {
        "P1_7" => return Ok(p1_7()),
        "P2_7" => return Ok(p2_7()),
        "Fig8" => return Ok(fig8()),
        _ => {}
    }
    if let Some(i) = family(name, "Lambda") {
        return lambda(i).map_err(|_| unknown());
    }
    if let Some(i) = family(name, "Phi") {
        return phi(i).map_err(|_| unknown());
    }
    if let Some(m) = family(name, "C") {
        return cycle(m).map_err(|_| unknown());
    }
    if let Some(n) = family(name, "P") {
        return path(n).map_err(|_| unknown());
    }
    if let Some(n) = family(name, "K") {
        return complete(n).map_err(|_| unknown());
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for i in 1..=11 {
            assert_eq!(lambda(i).unwrap().n(), 7, "Lambda{i}");
        }
        for i in 1..=5 {
            assert_eq!(phi(i).unwrap().n(), 8, "Phi{i}");
        }
        assert_eq!(lambda0().n(), 6);
        assert_eq!(fig8().n(), 12);
        assert_eq!(p1_7().n(), 7);
        assert_eq!(p2_7().n(), 7);
    }

    #[test]
    fn opposite_degrees_match_drawings() {
        let opp = lambda(1).unwrap().opposite();
        assert_eq!(opp.degree(opp.index_of("t").unwrap()), 4);
        let opp = phi(4).unwrap().opposite();
        assert_eq!(opp.edge_count(), 10);
        let opp = fig8().opposite();
        assert_eq!(opp.edge_count(), 11);
    }

    #[test]
    fn names() {
        assert_eq!(named("C6opp").unwrap(), cycle(6).unwrap().opposite());
        assert_eq!(named("P7").unwrap().edge_count(), 6);
        assert_eq!(named("K4").unwrap().edge_count(), 6);
        assert_eq!(named("Lambda11").unwrap(), lambda(11).unwrap());
        for name in NAMED_GRAPHS {
            assert!(named(name).is_ok(), "{name}");
        }
        assert!(named("C2").is_err());
        assert!(named("Lambda12").is_err());
        assert!(named("opp").is_err());
        assert!(named("Q3").is_err());
    }
}
