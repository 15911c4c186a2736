//! Distance partitions rendered as DOT graphs.

use std::fmt::Write;

use crate::array::IntersectionArray;
use crate::error::{DrgError, Result};

/// A cell of a distance partition: vertices at distance `i` from `u` and
/// `j` from `v`, or at distance `i` from a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub index: (usize, usize),
    pub size: drg_exact::Rat,
}

/// Cells of the partition with respect to a pair of vertices at distance
/// `h`, or to a single vertex when `h` is `None`.
pub fn cells(ia: &IntersectionArray, h: Option<usize>) -> Result<Vec<Cell>> {
    let d = ia.diameter();
    match h {
        None => Ok((0..=d)
            .map(|i| Cell {
                index: (i, i),
                size: ia.k(i),
            })
            .collect()),
        Some(h) if h > d => Err(DrgError::precondition(format!("distance {h} exceeds the diameter {d}"))),
        Some(h) => {
            let mut out = Vec::new();
            for i in 0..=d {
                for j in 0..=d {
                    let size = ia.p(h, i, j);
                    if size.is_positive() {
                        out.push(Cell {
                            index: (i, j),
                            size: size.clone(),
                        });
                    }
                }
            }
            Ok(out)
        }
    }
}

/// DOT source of the partition diagram. Nodes are labelled by cell size;
/// cells whose indices differ by at most one in each coordinate are joined.
pub fn to_dot(ia: &IntersectionArray, h: Option<usize>) -> Result<String> {
    let cells = cells(ia, h)?;
    let id = |c: &Cell| match h {
        None => format!("d{}", c.index.0),
        Some(_) => format!("d{}_{}", c.index.0, c.index.1),
    };
    let mut out = String::new();
    let title = match h {
        None => format!("distance partition of {ia}"),
        Some(h) => format!("distance partition of {ia} for a pair at distance {h}"),
    };
    writeln!(out, "graph partition {{").unwrap();
    writeln!(out, "  label=\"{title}\";").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for c in &cells {
        let tip = match h {
            None => format!("{}", c.index.0),
            Some(_) => format!("{} {}", c.index.0, c.index.1),
        };
        writeln!(out, "  {} [label=\"{}\", tooltip=\"{}\"];", id(c), c.size, tip).unwrap();
    }
    for (x, a) in cells.iter().enumerate() {
        for b in &cells[x + 1..] {
            let near = a.index.0.abs_diff(b.index.0) <= 1 && a.index.1.abs_diff(b.index.1) <= 1;
            if near {
                writeln!(out, "  {} -- {};", id(a), id(b)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
