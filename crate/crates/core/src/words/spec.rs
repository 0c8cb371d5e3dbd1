use std::fmt;
use std::str::FromStr;

use super::{Result, WordError};
use crate::graphs::{members, SimpleGraph, VertexSet};

/// Order of a cyclic vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// `ℤ/m` with `m ≥ 2`.
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "∞" => Ok(Order::Infinite),
            _ => match s.parse::<u32>() {
                Ok(m) if m >= 2 => Ok(Order::Finite(m)),
                _ => Err(WordError::BadOrder(s.to_string())),
            },
        }
    }
}

/// A simplicial graph with a cyclic group of given order at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    graph: SimpleGraph,
    orders: Vec<Order>,
}

impl GroupSpec {
    pub fn new(graph: SimpleGraph, orders: Vec<Order>) -> Result<Self> {
        if orders.len() != graph.n() {
            return Err(WordError::OrderCount { expected: graph.n(), got: orders.len() });
        }
        if let Some(bad) = orders.iter().find(|o| matches!(o, Order::Finite(m) if *m < 2)) {
            return Err(WordError::BadOrder(bad.to_string()));
        }
        Ok(Self { graph, orders })
    }

    pub fn uniform(graph: SimpleGraph, order: Order) -> Result<Self> {
        let n = graph.n();
        Self::new(graph, vec![order; n])
    }

    /// Right-angled Artin group: every vertex group infinite cyclic.
    pub fn raag(graph: SimpleGraph) -> Self {
        Self::uniform(graph, Order::Infinite).expect("infinite orders are valid")
    }

    /// Right-angled Coxeter group: every vertex group of order two.
    pub fn racg(graph: SimpleGraph) -> Self {
        Self::uniform(graph, Order::Finite(2)).expect("order two is valid")
    }

    /// The graph edge-list format plus one `o <v> <m|inf>` line per vertex.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, |_, _| Ok(false))
    }

    /// As [`GroupSpec::parse`], handing unrecognised lines to `extra`.
    pub(crate) fn parse_with(text: &str, mut extra: impl FnMut(usize, &[&str]) -> Result<bool>) -> Result<Self> {
        let mut pending: Vec<(usize, String, String)> = Vec::new();
        let graph = SimpleGraph::parse_edge_list_with(text, |line, fields| match fields {
            ["o", v, m] => {
                pending.push((line, v.to_string(), m.to_string()));
                Ok(true)
            }
            _ => extra(line, fields).map_err(|e| match e {
                WordError::Graph(g) => g,
                other => crate::graphs::GraphError::Parse { line, msg: other.to_string() },
            }),
        })?;
        let mut orders: Vec<Option<Order>> = vec![None; graph.n()];
        for (line, v, m) in pending {
            let i = graph.index_of(&v)?;
            let order: Order = m.parse()?;
            if orders[i].replace(order).is_some() {
                return Err(WordError::Parse { line, msg: format!("repeated order for `{v}`") });
            }
        }
        let orders = orders
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| WordError::MissingOrder(graph.label(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, orders)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn orders(&self) -> &[Order] {
        &self.orders
    }

    pub fn order(&self, v: usize) -> Order {
        self.orders[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Vertices whose group is finite.
    pub fn finite_part(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.orders[v].is_finite()).fold(0, |s, v| s | 1 << v)
    }

    /// Distinct adjacent vertices generate commuting groups.
    pub fn commute(&self, u: usize, v: usize) -> bool {
        u != v && self.graph.adjacent(u, v)
    }

    /// Product of the finite vertex-group orders.
    pub fn finite_index(&self) -> u64 {
        members(self.finite_part())
            .map(|v| match self.orders[v] {
                Order::Finite(m) => m as u64,
                Order::Infinite => 1,
            })
            .product()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph)?;
        for (label, order) in self.graph.labels().iter().zip(&self.orders) {
            writeln!(f, "o {label} {order}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let text = "n 3 a b c\ne a b\ne b c\no a 3\no b inf\no c 4\n";
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.orders(), &[Order::Finite(3), Order::Infinite, Order::Finite(4)]);
        assert_eq!(spec.finite_part(), 0b101);
        assert_eq!(spec.finite_index(), 12);
        assert_eq!(spec.to_string(), text);
        assert!(spec.commute(0, 1) && !spec.commute(0, 2) && !spec.commute(1, 1));
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(GroupSpec::parse("n 1 a\no a 1\n"), Err(WordError::BadOrder(_))));
        assert!(matches!(GroupSpec::parse("n 2 a b\no a 2\n"), Err(WordError::MissingOrder(v)) if v == "b"));
        assert!(matches!(GroupSpec::parse("n 1 a\no a 2\no a 3\n"), Err(WordError::Parse { line: 3, .. })));
        assert!(GroupSpec::parse("n 1 a\no z 2\n").is_err());
        assert!("∞".parse::<Order>().unwrap() == Order::Infinite);
    }
}
