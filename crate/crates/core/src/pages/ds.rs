use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::linalg::{quotient_basis, Matrix, QuotientFrame, Rational, Subspace};
use crate::supermod::{c_invariants, DimTable, Parity, SuperModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "x+y")]
    XPlusY,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::X => "x",
            Direction::Y => "y",
            Direction::XPlusY => "x+y",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" => Ok(Direction::X),
            "y" => Ok(Direction::Y),
            "x+y" => Ok(Direction::XPlusY),
            _ => Err(format!("unknown direction {s:?}, expected x, y or x+y")),
        }
    }
}

/// `ker u / im u` with homogeneous representatives. For `x` and `y` the result is
/// h-graded; for `x + y` only the parity grading survives and `weights` is `None`.
/// Representatives live in the basis of the module `ambient` (the c-invariant part
/// for `x + y`, the whole module otherwise).
#[derive(Clone, Debug)]
pub struct DsSpace {
    pub direction: Direction,
    pub ambient: SuperModule,
    pub reps: Vec<Vec<Rational>>,
    pub parities: Vec<Parity>,
    pub weights: Option<Vec<Rational>>,
    pub kernel: Subspace,
    pub image: Subspace,
    frame: QuotientFrame,
}

impl DsSpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn sdims(&self) -> (usize, usize) {
        let e = self.parities.iter().filter(|p| **p == Parity::Even).count();
        (e, self.dim() - e)
    }

    pub fn dim_table(&self) -> Option<DimTable> {
        self.weights
            .as_ref()
            .map(|ws| ws.iter().zip(&self.parities).map(|(w, p)| (w.clone(), *p, 1)).collect())
    }

    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.frame.coords(v)
    }
}

pub fn ds(m: &SuperModule, direction: Direction) -> DsSpace {
    let ambient = match direction {
        Direction::XPlusY => c_invariants(m),
        _ => m.clone(),
    };
    let u: Matrix = match direction {
        Direction::X => ambient.x().clone(),
        Direction::Y => ambient.y().clone(),
        Direction::XPlusY => ambient.x().add(ambient.y()),
    };
    let n = ambient.dim();
    let kernel = u.kernel();
    let image = u.image();
    let mut reps = Vec::new();
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    // graded pieces: (weight, parity) for x and y, parity only for x + y
    let mut pieces: Vec<(Option<Rational>, Parity, Vec<usize>)> = Vec::new();
    match direction {
        Direction::XPlusY => {
            for p in Parity::BOTH {
                let idx = (0..n).filter(|&i| ambient.basis()[i].parity == p).collect();
                pieces.push((None, p, idx));
            }
        }
        _ => {
            for w in ambient.weights() {
                for p in Parity::BOTH {
                    let idx = ambient.indices_at(&w, p);
                    if !idx.is_empty() {
                        pieces.push((Some(w.clone()), p, idx));
                    }
                }
            }
        }
    }
    for (w, p, idx) in pieces {
        let piece = Subspace::coordinate(n, &idx);
        let k = kernel.intersect(&piece);
        let i = image.intersect(&piece);
        for v in quotient_basis(&k, &i).expect("image inside kernel") {
            reps.push(v);
            parities.push(p);
            if let Some(w) = &w {
                weights.push(w.clone());
            }
        }
    }
    let frame = QuotientFrame::new(&reps, &image);
    DsSpace {
        direction,
        ambient,
        reps,
        parities,
        weights: (direction != Direction::XPlusY).then_some(weights),
        kernel,
        image,
        frame,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;
    use crate::supermod::{make_indecomposable, IndecompId, IndecompKind};

    fn make(kind: IndecompKind, t: i64) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind).twisted(int(t))).unwrap()
    }

    #[test]
    fn projectives_vanish() {
        for d in [Direction::X, Direction::Y, Direction::XPlusY] {
            assert_eq!(ds(&make(IndecompKind::P, 0), d).dim(), 0);
            assert_eq!(ds(&make(IndecompKind::Charged(int(2)), 0), d).dim(), 0);
        }
    }

    #[test]
    fn x_family() {
        for n in 1..=4 {
            assert_eq!(ds(&make(IndecompKind::X(n), 0), Direction::X).dim(), 0);
            assert_eq!(ds(&make(IndecompKind::X(n), 0), Direction::Y).sdims(), (1, 1));
            assert_eq!(ds(&make(IndecompKind::X(n), 0), Direction::XPlusY).dim(), 0);
        }
    }

    #[test]
    fn w_family_one_even_line() {
        for n in -3..=3 {
            for r in -2..=2 {
                let w = make(IndecompKind::W(n), r);
                for d in [Direction::X, Direction::Y, Direction::XPlusY] {
                    assert_eq!(ds(&w, d).sdims(), (1, 0), "W({n})_{r} along {d}");
                }
            }
        }
    }
}
