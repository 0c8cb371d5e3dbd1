//! Text format: a group spec, one `box` line per infinite-order vertex and,
//! for hand-built complexes, `cube` lines.
//!
//! ```text
//! n 2 a b
//! e a b
//! o a 2
//! o b inf
//! box b 0 3          # or: box b cyclic 4
//! cube 0,1 a,b       # base point, direction labels (`-` for none)
//! ```

use std::fmt;
use std::sync::Arc;

use super::{ComplexError, Cube, CubeBox, CubeComplex, Range, Result};
use crate::graphs::members;
use crate::words::{GroupSpec, Order};

fn parse_error(line: usize, msg: impl Into<String>) -> ComplexError {
    ComplexError::Parse { line, msg: msg.into() }
}

impl CubeComplex {
    pub fn parse(text: &str) -> Result<Self> {
        let mut boxes: Vec<(usize, Vec<String>)> = Vec::new();
        let mut cubes: Vec<(usize, Vec<String>)> = Vec::new();
        let spec = GroupSpec::parse_with(text, |line, fields| {
            let owned = || fields[1..].iter().map(|s| s.to_string()).collect();
            match fields.first() {
                Some(&"box") => boxes.push((line, owned())),
                Some(&"cube") => cubes.push((line, owned())),
                _ => return Ok(false),
            }
            Ok(true)
        })?;
        let graph = spec.graph();
        let mut ranges: Vec<Option<Range>> = vec![None; spec.n()];
        for (line, f) in boxes {
            let [v, rest @ ..] = f.as_slice() else {
                return Err(parse_error(line, "`box` needs a vertex"));
            };
            let i = graph.index_of(v).map_err(|e| parse_error(line, e.to_string()))?;
            if spec.order(i).is_finite() {
                return Err(parse_error(line, format!("`{v}` has finite order; its range is fixed")));
            }
            let int = |s: &String| s.parse::<i64>().map_err(|_| parse_error(line, format!("bad integer `{s}`")));
            let range = match rest {
                [c, q] if c == "cyclic" => {
                    Range::Cyclic { size: q.parse().map_err(|_| parse_error(line, format!("bad size `{q}`")))? }
                }
                [lo, hi] => Range::Interval { lo: int(lo)?, hi: int(hi)? },
                _ => return Err(parse_error(line, "expected `box <v> <lo> <hi>` or `box <v> cyclic <q>`")),
            };
            if ranges[i].replace(range).is_some() {
                return Err(parse_error(line, format!("repeated box for `{v}`")));
            }
        }
        let mut missing = None;
        let bx = CubeBox::for_spec(&spec, |v| {
            ranges[v].unwrap_or_else(|| {
                missing.get_or_insert(v);
                Range::Interval { lo: 0, hi: 0 }
            })
        })?;
        if let Some(v) = missing {
            return Err(parse_error(0, format!("no `box` line for infinite-order vertex `{}`", graph.label(v))));
        }
        let spec = Arc::new(spec);
        if cubes.is_empty() {
            return Ok(CubeComplex::full(spec, bx));
        }
        let mut list = Vec::new();
        for (line, f) in cubes {
            let [base, dirs] = f.as_slice() else {
                return Err(parse_error(line, "expected `cube <x1,x2,…> <d1,d2,…|->`"));
            };
            let base: Vec<i64> = base
                .split(',')
                .map(|x| x.parse().map_err(|_| parse_error(line, format!("bad coordinate `{x}`"))))
                .collect::<Result<_>>()?;
            let dirs = if dirs == "-" {
                0
            } else {
                let labels: Vec<&str> = dirs.split(',').collect();
                spec.graph().set_of(&labels).map_err(|e| parse_error(line, e.to_string()))?
            };
            list.push(Cube { base, dirs });
        }
        CubeComplex::from_cubes(spec, bx, list)
    }

    fn write_cube(&self, f: &mut impl fmt::Write, cube: &Cube) -> fmt::Result {
        let base = cube.base.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let dirs = if cube.dirs == 0 {
            "-".to_string()
        } else {
            members(cube.dirs).map(|d| self.spec.graph().label(d)).collect::<Vec<_>>().join(",")
        };
        writeln!(f, "cube {base} {dirs}")
    }

    /// Every cube as a `cube` line, sorted by direction set then base point.
    pub fn cell_dump(&self) -> String {
        let mut out = String::new();
        for c in self.cubes() {
            self.write_cube(&mut out, &c).expect("writing to a String");
        }
        out
    }
}

impl fmt::Display for CubeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)?;
        for (v, r) in self.bx.ranges().iter().enumerate() {
            if self.spec.order(v) == Order::Infinite {
                let label = self.spec.graph().label(v);
                match r {
                    Range::Interval { lo, hi } => writeln!(f, "box {label} {lo} {hi}")?,
                    Range::Cyclic { size } => writeln!(f, "box {label} cyclic {size}")?,
                }
            }
        }
        if self.is_listed() {
            for c in self.cubes() {
                self.write_cube(f, &c)?;
            }
        }
        Ok(())
    }
}
