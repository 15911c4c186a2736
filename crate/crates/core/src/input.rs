//! Text forms accepted for parameter sets: `{b; c}`, `srg(k,l,m)`,
//! `srg(v,k,l,m)` and `classical(d,b,alpha,beta)`.

use drg_exact::Rat;

use crate::array::IntersectionArray;
use crate::error::{DrgError, Result};

pub fn parse_input(text: &str) -> Result<IntersectionArray> {
    let t = text.trim();
    if t.starts_with('{') {
        return t.parse();
    }
    let (name, args) = t
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(|| DrgError::Parse(format!("unrecognised input {text:?}")))?;
    let args: Vec<Rat> = args
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<Rat>()
                .map_err(|_| DrgError::Parse(format!("bad number {:?} in {text:?}", a.trim())))
        })
        .collect::<Result<_>>()?;
    match (name.trim(), args.as_slice()) {
        ("srg", [k, l, m]) => IntersectionArray::from_srg(k, l, m),
        ("srg", [v, k, l, m]) => IntersectionArray::from_srg_v(v, k, l, m),
        ("classical", [d, b, alpha, beta]) => {
            let d = d
                .to_i64()
                .filter(|&d| d > 0)
                .ok_or_else(|| DrgError::Parse(format!("diameter {d} is not a positive integer")))?;
            IntersectionArray::from_classical(d as usize, b, alpha, beta)
        }
        _ => Err(DrgError::Parse(format!(
            "expected srg(k,l,m), srg(v,k,l,m) or classical(d,b,alpha,beta), got {text:?}"
        ))),
    }
}
