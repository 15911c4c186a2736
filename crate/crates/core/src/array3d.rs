//! Cubic arrays indexed `[h][i][j]`, with the block layout used for
//! intersection numbers, Krein parameters and triple intersection numbers.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Array3D<T> {
    n: usize,
    data: Vec<T>,
}

impl<T> Array3D<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for h in 0..n {
            for i in 0..n {
                for j in 0..n {
                    data.push(f(h, i, j));
                }
            }
        }
        Array3D { n, data }
    }

    /// Side length (`d + 1` for a diameter-`d` scheme).
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> &T {
        &self.data[(h * self.n + i) * self.n + j]
    }

    pub fn set(&mut self, h: usize, i: usize, j: usize, v: T) {
        self.data[(h * self.n + i) * self.n + j] = v;
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Array3D<U> {
        Array3D {
            n: self.n,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    /// Entries with their indices, in `[h][i][j]` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| ((k / (n * n), (k / n) % n, k % n), v))
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<&T>>> {
        (0..self.n)
            .map(|h| {
                (0..self.n)
                    .map(|i| (0..self.n).map(|j| self.get(h, i, j)).collect())
                    .collect()
            })
            .collect()
    }
}

impl<T: Clone> Array3D<T> {
    pub fn filled(n: usize, v: T) -> Self {
        Array3D {
            n,
            data: vec![v; n * n * n],
        }
    }
}

/// Renders a matrix with every entry right-aligned to the widest one.
pub fn render_matrix<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    render_rows(
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        "",
    )
}

fn render_rows(rows: Vec<Vec<String>>, label: &str) -> String {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    let indent = " ".repeat(label.chars().count());
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        if r > 0 {
            out.push('\n');
            out.push_str(&indent);
        } else {
            out.push_str(label);
        }
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push('[');
        out.push_str(&cells.join(" "));
        out.push(']');
    }
    out
}

impl<T: fmt::Display> fmt::Display for Array3D<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = (0..self.n)
            .map(|h| {
                let rows = (0..self.n)
                    .map(|i| (0..self.n).map(|j| self.get(h, i, j).to_string()).collect())
                    .collect();
                render_rows(rows, &format!("{h}: "))
            })
            .collect();
        f.write_str(&blocks.join("\n\n"))
    }
}

impl<T: Serialize> Serialize for Array3D<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_nested().serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Array3D<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let nested: Vec<Vec<Vec<T>>> = Vec::deserialize(deserializer)?;
        let n = nested.len();
        let mut data = Vec::with_capacity(n * n * n);
        for block in nested {
            if block.len() != n {
                return Err(D::Error::custom("array is not cubic"));
            }
            for row in block {
                if row.len() != n {
                    return Err(D::Error::custom("array is not cubic"));
                }
                data.extend(row);
            }
        }
        Ok(Array3D { n, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_layout_pads_per_block() {
        let a = Array3D::from_fn(
            2,
            |h, i, j| if h == 1 && i == 1 && j == 1 { 10 } else { (i + j) as i32 },
        );
        assert_eq!(a.to_string(), "0: [0 1]\n   [1 2]\n\n1: [ 0  1]\n   [ 1 10]");
    }

    #[test]
    fn json_round_trip() {
        let a = Array3D::from_fn(2, |h, i, j| (h * 4 + i * 2 + j) as i64);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[[0,1],[2,3]],[[4,5],[6,7]]]");
        let b: Array3D<i64> = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
