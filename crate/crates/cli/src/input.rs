//! Shared argument groups: where graphs, specs and complexes come from.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use gpw::complexes::{build_z0, build_zf, CubeComplex};
use gpw::graphs::named;
use gpw::{GroupSpec, Order, SimpleGraph};

/// `-` or a missing path reads standard input.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Named graph: C5, P7opp, K4, Lambda3, Phi4, P1_7, P2_7, Fig8, …
    #[arg(long, conflicts_with_all = ["graph", "g6"])]
    pub name: Option<String>,
    /// Edge-list or graph6 file (`-` for standard input).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Inline graph6 code.
    #[arg(long, conflicts_with = "graph")]
    pub g6: Option<String>,
}

impl GraphInput {
    pub fn is_given(&self) -> bool {
        self.name.is_some() || self.graph.is_some() || self.g6.is_some()
    }

    /// Falls back to standard input when nothing is given.
    pub fn load(&self) -> Result<SimpleGraph> {
        if let Some(name) = &self.name {
            return Ok(named(name)?);
        }
        if let Some(code) = &self.g6 {
            return Ok(SimpleGraph::from_graph6(code)?);
        }
        Ok(SimpleGraph::parse_any(&read_text(self.graph.as_deref())?)?)
    }
}

/// `2` for every vertex, or one order per vertex: `2,3,inf`.
pub fn parse_orders(text: &str, n: usize) -> Result<Vec<Order>> {
    let orders = text.split(',').map(|s| s.trim().parse::<Order>()).collect::<Result<Vec<_>, _>>()?;
    match orders.len() {
        1 => Ok(vec![orders[0]; n]),
        k if k == n => Ok(orders),
        k => bail!("expected 1 or {n} orders, got {k}"),
    }
}

#[derive(Debug, Args)]
pub struct SpecInput {
    /// Group spec file: an edge list plus `o <v> <m|inf>` lines.
    #[arg(long, conflicts_with_all = ["name", "graph", "g6"])]
    pub spec: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphInput,
    /// Vertex orders for a graph input: one value for all vertices or a
    /// comma-separated list in vertex order.
    #[arg(long)]
    pub orders: Option<String>,
}

impl SpecInput {
    pub fn is_given(&self) -> bool {
        self.spec.is_some() || self.graph.is_given()
    }

    pub fn load(&self) -> Result<Arc<GroupSpec>> {
        if let Some(path) = &self.spec {
            if self.orders.is_some() {
                bail!("--orders cannot be combined with --spec");
            }
            return Ok(Arc::new(GroupSpec::parse(&read_text(Some(path))?)?));
        }
        if !self.graph.is_given() {
            return Ok(Arc::new(GroupSpec::parse(&read_text(None)?)?));
        }
        let g = self.graph.load()?;
        let orders = parse_orders(self.orders.as_deref().context("--orders is required with a graph input")?, g.n())?;
        Ok(Arc::new(GroupSpec::new(g, orders)?))
    }
}

#[derive(Debug, Args)]
pub struct ComplexInput {
    /// Complex file (`-` for standard input); the default when no spec is given.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    #[command(flatten)]
    pub spec: SpecInput,
    /// Window `lo,hi` for infinite-order vertices when building `Z0`.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true, conflicts_with = "q")]
    pub window: Option<(i64, i64)>,
    /// Build the finite cover `Zf` with cycles of length `q` instead of `Z0`.
    #[arg(short, long)]
    pub q: Option<u32>,
}

pub fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let int = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad integer `{x}`"));
    Ok((int(lo)?, int(hi)?))
}

impl ComplexInput {
    pub fn load(&self) -> Result<CubeComplex> {
        if self.spec.is_given() {
            if self.complex.is_some() {
                bail!("give either --complex or a spec, not both");
            }
            let spec = self.spec.load()?;
            return Ok(match self.q {
                Some(q) => build_zf(&spec, q)?,
                None => build_z0(&spec, self.window)?,
            });
        }
        if self.q.is_some() || self.window.is_some() {
            bail!("--window and -q need a spec input");
        }
        Ok(CubeComplex::parse(&read_text(self.complex.as_deref())?)?)
    }
}

/// `u,v` as two labels.
pub fn parse_pair(s: &str) -> Result<(String, String), String> {
    match s.split(',').map(str::trim).collect::<Vec<_>>().as_slice() {
        [u, v] if !u.is_empty() && !v.is_empty() => Ok((u.to_string(), v.to_string())),
        _ => Err("expected two labels `u,v`".into()),
    }
}
