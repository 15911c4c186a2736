//! Parameters of graphs derived from a distance-regular graph.

use std::collections::BTreeMap;

use drg_exact::Rat;

use crate::array::IntersectionArray;
use crate::error::{DrgError, Result};

/// Largest diameter for which [`IntersectionArray::distance_graphs`]
/// enumerates merges.
pub const MAX_MERGE_DIAMETER: usize = 8;

impl IntersectionArray {
    /// The folded graph of an antipodal cover.
    pub fn antipodal_quotient(&self) -> Result<IntersectionArray> {
        let r = self
            .antipodal_index()
            .ok_or_else(|| DrgError::precondition("graph is not antipodal"))?;
        let d = self.diameter();
        if d == 2 {
            let m = self.order() / &r;
            return IntersectionArray::new(vec![m - Rat::one()], vec![Rat::one()]);
        }
        let e = d / 2;
        let b = (0..e).map(|i| self.b(i)).collect();
        let mut c: Vec<Rat> = (1..=e).map(|i| self.c(i)).collect();
        if d % 2 == 0 {
            c[e - 1] = &c[e - 1] * &r;
        }
        IntersectionArray::new(b, c)
    }

    /// One part of the distance-2 graph of a bipartite graph.
    pub fn bipartite_half(&self) -> Result<IntersectionArray> {
        let d = self.diameter();
        if !self.is_bipartite() || d < 2 {
            return Err(DrgError::precondition("graph is not bipartite of diameter at least 2"));
        }
        let c2 = self.c(2);
        let e = d / 2;
        let b = (0..e).map(|i| self.b(2 * i) * self.b(2 * i + 1) / &c2).collect();
        let c = (1..=e).map(|i| self.c(2 * i - 1) * self.c(2 * i) / &c2).collect();
        IntersectionArray::new(b, c)
    }

    /// The complement of a strongly regular graph, if it is connected.
    pub fn complement(&self) -> Result<IntersectionArray> {
        let (v, k, l, m) = self
            .srg_params()
            .ok_or_else(|| DrgError::precondition("graph is not strongly regular"))?;
        let two = Rat::from(2);
        let kc = &v - &k - Rat::one();
        let lc = &v - &two * &k + &m - &two;
        let mc = &v - &two * &k + &l;
        if !mc.is_positive() || !kc.is_positive() {
            return Err(DrgError::precondition("complement is disconnected"));
        }
        IntersectionArray::from_srg(&kc, &lc, &mc)
    }

    /// The graph in which two vertices are adjacent when their distance
    /// lies in `set`, or the connected component containing a vertex if
    /// that graph is disconnected. `None` unless the result is
    /// distance-regular with a valid array.
    pub fn merge_classes(&self, set: &[usize]) -> Option<IntersectionArray> {
        let d = self.diameter();
        let mut s: Vec<usize> = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s.iter().any(|&i| i == 0 || i > d) {
            return None;
        }
        let p = self.p_tensor();
        // weight[j][h]: neighbours in class h of a vertex in class j
        let weight: Vec<Vec<Rat>> = (0..=d)
            .map(|j| (0..=d).map(|h| s.iter().map(|&i| p.get(j, h, i)).sum()).collect())
            .collect();
        let mut layer_of: Vec<Option<usize>> = vec![None; d + 1];
        layer_of[0] = Some(0);
        let mut layers: Vec<Vec<usize>> = vec![vec![0]];
        loop {
            let m = layers.len() - 1;
            let next: Vec<usize> = (0..=d)
                .filter(|&h| layer_of[h].is_none())
                .filter(|&h| layers[m].iter().any(|&j| weight[h][j].is_positive()))
                .collect();
            if next.is_empty() {
                break;
            }
            for &h in &next {
                layer_of[h] = Some(m + 1);
            }
            layers.push(next);
        }
        let dd = layers.len() - 1;
        if dd == 0 {
            return None;
        }
        let mut b = Vec::with_capacity(dd);
        let mut c = Vec::with_capacity(dd);
        for (m, layer) in layers.iter().enumerate() {
            let mut bm: Option<Rat> = None;
            let mut cm: Option<Rat> = None;
            for &j in layer {
                let mut down = Rat::zero();
                let mut up = Rat::zero();
                for h in 0..=d {
                    let w = &weight[j][h];
                    if w.is_zero() {
                        continue;
                    }
                    match layer_of[h] {
                        Some(x) if x + 1 == m => down += w,
                        Some(x) if x == m + 1 => up += w,
                        Some(x) if x == m => {}
                        _ => return None,
                    }
                }
                if bm.get_or_insert_with(|| up.clone()) != &up || cm.get_or_insert_with(|| down.clone()) != &down {
                    return None;
                }
            }
            if m < dd {
                b.push(bm.expect("nonempty layer"));
            }
            if m > 0 {
                c.push(cm.expect("nonempty layer"));
            }
        }
        IntersectionArray::new(b, c).ok()
    }

    /// Distance-regular graphs obtained by merging classes, keyed by the
    /// merged set. The trivial sets `{1}` and `{1, ..., d}` are omitted.
    pub fn distance_graphs(&self) -> BTreeMap<Vec<usize>, IntersectionArray> {
        let d = self.diameter();
        let mut out = BTreeMap::new();
        if d > MAX_MERGE_DIAMETER || d < 2 {
            return out;
        }
        for mask in 1u32..(1 << d) {
            let set: Vec<usize> = (1..=d).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
            if set == [1] || set.len() == d {
                continue;
            }
            if let Some(ia) = self.merge_classes(&set) {
                out.insert(set, ia);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q7() -> IntersectionArray {
        "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}".parse().unwrap()
    }

    #[test]
    fn cube_derived() {
        let q = q7();
        assert_eq!(q.antipodal_quotient().unwrap().to_string(), "{7, 6, 5; 1, 2, 3}");
        assert_eq!(q.bipartite_half().unwrap().to_string(), "{21, 10, 3; 1, 6, 15}");
        assert_eq!(
            q.merge_classes(&[2, 3, 6]).unwrap().to_string(),
            "{63, 30, 1; 1, 30, 63}"
        );
        assert_eq!(q.merge_classes(&[2, 4, 6]).unwrap().to_string(), "{63; 1}");
        assert_eq!(
            q.merge_classes(&[1, 7]).unwrap().to_string(),
            "{8, 7, 6, 5; 1, 2, 3, 8}"
        );
        assert!(q.merge_classes(&[3]).is_none());
    }

    #[test]
    fn petersen_complement() {
        let p: IntersectionArray = "{3,2;1,1}".parse().unwrap();
        assert_eq!(p.complement().unwrap().to_string(), "{6, 2; 1, 4}");
        assert!(p.antipodal_quotient().is_err());
        assert!(p.bipartite_half().is_err());
    }

    #[test]
    fn even_diameter_quotient() {
        let q4: IntersectionArray = "{4,3,2,1;1,2,3,4}".parse().unwrap();
        let quo = q4.antipodal_quotient().unwrap();
        assert_eq!(quo.to_string(), "{4, 3; 1, 4}");
        assert_eq!(quo.order() * Rat::from(2), *q4.order());
        let c6: IntersectionArray = "{2,1,1;1,1,2}".parse().unwrap();
        assert_eq!(c6.antipodal_quotient().unwrap().to_string(), "{2; 1}");
        let k33: IntersectionArray = "{3,2;1,3}".parse().unwrap();
        assert_eq!(k33.antipodal_quotient().unwrap().to_string(), "{1; 1}");
    }
}
