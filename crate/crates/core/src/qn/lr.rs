use serde::{Serialize, Serializer};
use std::fmt;

use crate::linalg::rational::{int, to_i64, Rational};

/// Weakly decreasing nonnegative integers, trailing zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `"2,1"`, `"()"` or the empty string for the empty partition.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Some(Self::empty());
        }
        let parts = s.split(',').map(|p| p.trim().parse().ok()).collect::<Option<Vec<u32>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of `n` with at most `rows` rows, in reverse lexicographic order.
    pub fn all_of(n: u32, rows: usize) -> Vec<Partition> {
        fn go(left: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == rows {
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                go(left - p, p, rows, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, rows, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `c^gamma_{lambda mu}`: the number of semistandard fillings of `gamma / lambda`
/// with content `mu` whose reading word (rows top to bottom, each right to left)
/// is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, gamma: &Partition) -> u64 {
    if lambda.size() + mu.size() != gamma.size() || !gamma.contains(lambda) || !gamma.contains(mu) {
        return 0;
    }
    let rows = gamma.rows();
    let mut filling: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; gamma.part(i) as usize]).collect();
    let mut counts = vec![0u32; mu.rows()];
    fill(lambda, mu, gamma, 0, gamma.part(0) as usize, &mut filling, &mut counts)
}

fn fill(
    lambda: &Partition,
    mu: &Partition,
    gamma: &Partition,
    row: usize,
    col: usize,
    filling: &mut [Vec<usize>],
    counts: &mut [u32],
) -> u64 {
    if row == gamma.rows() {
        return u64::from(counts.iter().zip(mu.parts()).all(|(c, m)| c == m));
    }
    let start = lambda.part(row) as usize;
    if col == start {
        let next = row + 1;
        return fill(lambda, mu, gamma, next, gamma.part(next) as usize, filling, counts);
    }
    let j = col - 1;
    // weakly increasing along the row: the cell to the right bounds this one
    let hi = if col < gamma.part(row) as usize { filling[row][col] } else { mu.rows() };
    // strictly increasing down columns
    let lo = if row > 0 && j >= lambda.part(row - 1) as usize { filling[row - 1][j] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi {
        let k = v - 1;
        if counts[k] == mu.part(k) || (k > 0 && counts[k] == counts[k - 1]) {
            continue;
        }
        counts[k] += 1;
        filling[row][j] = v;
        total += fill(lambda, mu, gamma, row, j, filling, counts);
        counts[k] -= 1;
    }
    total
}

/// `dim V(lambda)` for `gl(n)`: the product of `(l_i - l_j + j - i) / (j - i)` over `i < j`.
pub fn weyl_dim(lambda: &Partition, n: usize) -> Option<u64> {
    if lambda.rows() > n {
        return None;
    }
    let mut d = int(1);
    for i in 0..n {
        for j in i + 1..n {
            let num = i64::from(lambda.part(i)) - i64::from(lambda.part(j)) + (j - i) as i64;
            d *= Rational::new(num.into(), ((j - i) as i64).into());
        }
    }
    to_i64(&d).map(|v| v as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_coefficients() {
        let e = Partition::empty();
        assert_eq!(lr_coefficient(&p(&[2, 1]), &e, &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn pieri() {
        // V(2,1) (x) V(1): add one box in each possible row
        let out: Vec<_> = Partition::all_of(4, 4).into_iter().filter(|g| lr_coefficient(&p(&[2, 1]), &p(&[1]), g) > 0).collect();
        assert_eq!(out, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim(&p(&[1]), 3), Some(3));
        assert_eq!(weyl_dim(&p(&[2]), 3), Some(6));
        assert_eq!(weyl_dim(&p(&[1, 1]), 3), Some(3));
        assert_eq!(weyl_dim(&p(&[2, 1]), 3), Some(8));
        assert_eq!(weyl_dim(&p(&[1, 1, 1, 1]), 3), None);
    }

    #[test]
    fn dimension_identity_gl3() {
        for a in 0..=3 {
            for b in 0..=3 - a {
                for l in Partition::all_of(a, 3) {
                    for m in Partition::all_of(b, 3) {
                        let sum: u64 = Partition::all_of(a + b, 3)
                            .iter()
                            .map(|g| lr_coefficient(&l, &m, g) * weyl_dim(g, 3).unwrap())
                            .sum();
                        assert_eq!(sum, weyl_dim(&l, 3).unwrap() * weyl_dim(&m, 3).unwrap(), "{l} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_partitions() {
        assert_eq!(Partition::parse("2,1"), Some(p(&[2, 1])));
        assert_eq!(Partition::parse("()"), Some(Partition::empty()));
        assert_eq!(Partition::parse("(3,1,0)"), Some(p(&[3, 1])));
        assert_eq!(Partition::parse("1,2"), None);
    }
}
