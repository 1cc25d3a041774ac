//! Indices `(k₁, …, kₙ)` of multiple zeta(-star) values and harmonic sums.
//!
//! Parts are stored innermost first: `k₁` belongs to the smallest summation
//! variable and `kₙ` to the largest.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    /// A non-empty composition of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse("an index needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("index parts must be positive: {parts:?}")));
        }
        Ok(Index { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn last(&self) -> u32 {
        *self.parts.last().expect("indices are non-empty")
    }
}

/// Builds an index from parts known to be valid.
#[macro_export]
macro_rules! ix {
    ($($k:expr),+ $(,)?) => {
        $crate::indices::Index::new(vec![$($k),+]).expect("literal index")
    };
}

/// Parses `"1^2,3,2^4"`-style text: comma-separated parts, each optionally
/// repeated `^c` times (`c = 0` drops the item).
pub fn parse_index(text: &str) -> Result<Index> {
    let parts = parse_parts(text)?;
    if parts.is_empty() {
        return Err(Error::Parse(format!("`{text}` expands to an empty index")));
    }
    Index::new(parts)
}

/// Like [`parse_index`] but accepts an empty expansion (and the literal
/// text `empty` or `()`), for finite sums where the empty index is meaningful.
pub fn parse_parts(text: &str) -> Result<Vec<u32>> {
    let t = text.trim();
    if t.is_empty() || t == "empty" || t == "()" {
        return Ok(Vec::new());
    }
    let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let mut parts = Vec::new();
    for item in t.split(',') {
        let item = item.trim();
        let (base, reps) = match item.split_once('^') {
            Some((b, c)) => (b.trim(), parse_count(c.trim(), text)?),
            None => (item, 1),
        };
        let k = parse_count(base, text)?;
        if k == 0 {
            return Err(Error::Parse(format!("zero part in `{text}`")));
        }
        parts.extend(std::iter::repeat(k).take(reps as usize));
    }
    Ok(parts)
}

fn parse_count(s: &str, whole: &str) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed index `{whole}`")));
    }
    s.parse().map_err(|_| Error::Parse(format!("part too large in `{whole}`")))
}

/// Compact text form, grouping runs with `^`.
pub fn render(ix: &Index) -> String {
    render_parts(ix.parts())
}

pub fn render_parts(parts: &[u32]) -> String {
    let mut items = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let run = j - i;
        items.push(if run > 1 { format!("{}^{}", parts[i], run) } else { parts[i].to_string() });
        i = j;
    }
    items.join(",")
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Index {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_index(s)
    }
}

/// Whether the (alternating) star series of `ix` converges.
pub fn admissible(ix: &Index, alternating: bool) -> bool {
    alternating || ix.last() >= 2
}

/// All `2^(n-1)` indices obtained by keeping or merging each gap; gap `g`
/// is bit `g` of a counter and keeping (bit 0) comes first.
pub fn coarsenings(ix: &Index) -> Vec<Index> {
    let gaps = ix.depth() - 1;
    (0u64..1 << gaps)
        .map(|mask| {
            let mut parts = vec![ix.parts[0]];
            for g in 0..gaps {
                let next = ix.parts[g + 1];
                if mask >> g & 1 == 1 {
                    *parts.last_mut().expect("non-empty") += next;
                } else {
                    parts.push(next);
                }
            }
            Index { parts }
        })
        .collect()
}

/// Compositions of `total` into exactly `parts` positive integers, in
/// lexicographic order.
pub fn compositions(total: u32, parts: u32) -> Result<Vec<Vec<u32>>> {
    if parts < 1 || parts > total {
        return Err(Error::domain(format!("no compositions of {total} into {parts} parts")));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts as usize);
    fill(total, parts, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 1 {
        current.push(remaining);
        out.push(current.clone());
        current.pop();
        return;
    }
    for first in 1..=remaining - (slots - 1) {
        current.push(first);
        fill(remaining - first, slots - 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_index("1,2").unwrap().parts(), &[1, 2]);
        assert_eq!(parse_index("2^3").unwrap().parts(), &[2, 2, 2]);
        assert_eq!(parse_index("1^2,3,2^2").unwrap().parts(), &[1, 1, 3, 2, 2]);
        assert_eq!(parse_index("1^0,2").unwrap().parts(), &[2]);
        for bad in ["", "1,,2", "0,2", "-1,2", "a", "2^", "2^0", "1.5"] {
            assert!(parse_index(bad).is_err(), "{bad} should fail");
        }
        assert_eq!(parse_parts("empty").unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&parse_index("1,1,3,2,2").unwrap()), "1^2,3,2^2");
        assert_eq!(parse_index("3,1").unwrap().to_string(), "(3,1)");
    }

    #[test]
    fn admissibility() {
        assert!(admissible(&ix![1, 2], false));
        assert!(!admissible(&ix![2, 1], false));
        assert!(admissible(&ix![2, 1], true));
    }

    #[test]
    fn coarsening_order() {
        let parts = |v: Vec<Index>| v.into_iter().map(|i| i.parts().to_vec()).collect::<Vec<_>>();
        assert_eq!(parts(coarsenings(&ix![1, 2])), vec![vec![1, 2], vec![3]]);
        assert_eq!(parts(coarsenings(&ix![2])), vec![vec![2]]);
        assert_eq!(
            parts(coarsenings(&ix![1, 1, 2])),
            vec![vec![1, 1, 2], vec![2, 2], vec![1, 3], vec![4]]
        );
    }

    #[test]
    fn composition_lists() {
        assert_eq!(compositions(3, 2).unwrap(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(4, 1).unwrap(), vec![vec![4]]);
        assert_eq!(compositions(4, 3).unwrap(), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert!(compositions(2, 3).is_err());
        assert!(compositions(2, 0).is_err());
    }
}
