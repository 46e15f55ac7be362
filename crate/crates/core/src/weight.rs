//! Weight-lattice vectors for GL and Sp.
//!
//! A [`GLWeight`] indexes a Schur functor of the dual tautological bundle.
//! Twists by `O(t)` are never stored on the side: they are absorbed into the
//! weight by adding `t` to every entry.

use std::fmt;

use crate::error::{EngineError, Result};

/// Integer weight of `GL(k)`. Dominance is a predicate, not an invariant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight(Vec<i64>);

impl GLWeight {
    pub fn new(entries: Vec<i64>) -> Self {
        GLWeight(entries)
    }

    pub fn zero(rank: usize) -> Self {
        GLWeight(vec![0; rank])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `Σ^w U ≅ Σ^{dual(w)} U^∨`: reverse and negate.
    pub fn dualize(&self) -> GLWeight {
        GLWeight(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// Tensor with `O(t)`.
    pub fn twist(&self, t: i64) -> GLWeight {
        GLWeight(self.0.iter().map(|&x| x + t).collect())
    }

    /// Componentwise order on weights of equal rank.
    pub fn leq(&self, other: &GLWeight) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(EngineError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Strict version of [`GLWeight::leq`].
    pub fn lt(&self, other: &GLWeight) -> Result<bool> {
        Ok(self.leq(other)? && self != other)
    }

    /// Pads with zeros up to `rank`.
    pub fn padded(&self, rank: usize) -> GLWeight {
        let mut v = self.0.clone();
        v.resize(rank.max(v.len()), 0);
        GLWeight(v)
    }
}

impl From<Vec<i64>> for GLWeight {
    fn from(v: Vec<i64>) -> Self {
        GLWeight(v)
    }
}

impl From<&[i64]> for GLWeight {
    fn from(v: &[i64]) -> Self {
        GLWeight(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for GLWeight {
    fn from(v: [i64; N]) -> Self {
        GLWeight(v.to_vec())
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL{self}")
    }
}

/// Dominant weight of `Sp(2n)`: non-increasing, non-negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpWeight(Vec<i64>);

impl SpWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let ok = entries.windows(2).all(|w| w[0] >= w[1]) && entries.iter().all(|&x| x >= 0);
        if ok {
            Ok(SpWeight(entries))
        } else {
            Err(EngineError::InvalidSpWeight(entries))
        }
    }

    pub fn trivial(rank: usize) -> Self {
        SpWeight(vec![0; rank])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for SpWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SpWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::from(v)
    }

    #[test]
    fn dualize_examples() {
        assert_eq!(w(&[2, 1, 0]).dualize(), w(&[0, -1, -2]));
        assert_eq!(w(&[0, 0, 0]).dualize(), w(&[0, 0, 0]));
        assert_eq!(w(&[3, 1, 0]).dualize(), w(&[0, -1, -3]));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(w(&[3, 1, 0]).twist(-2), w(&[1, -1, -2]));
        assert_eq!(w(&[2, 1, 0]).twist(5), w(&[7, 6, 5]));
        // the bundle Σ^{3,-1,-1}U^∨(-5)
        assert_eq!(w(&[3, -1, -1]).twist(-5), w(&[-2, -6, -6]));
    }

    #[test]
    fn leq_examples() {
        assert!(w(&[1, 0, 0]).leq(&w(&[2, 1, 0])).unwrap());
        assert!(w(&[2, 1, 0]).leq(&w(&[2, 1, 0])).unwrap());
        assert!(!w(&[2, 0, 0]).leq(&w(&[1, 1, 0])).unwrap());
        assert!(!w(&[1, 1, 0]).leq(&w(&[2, 0, 0])).unwrap());
        assert!(matches!(
            w(&[1, 0]).leq(&w(&[1, 0, 0])),
            Err(EngineError::RankMismatch { .. })
        ));
    }

    #[test]
    fn sp_weight_validation() {
        assert!(SpWeight::new(vec![2, 1, 0, 0]).is_ok());
        assert!(SpWeight::new(vec![1, 2]).is_err());
        assert!(SpWeight::new(vec![1, -1]).is_err());
    }

    fn dominant3() -> impl Strategy<Value = GLWeight> {
        (-4i64..=4, 0i64..=4, 0i64..=4).prop_map(|(c, b, a)| w(&[c + a + b, c + b, c]))
    }

    proptest! {
        #[test]
        fn dualize_is_involution(v in prop::collection::vec(-20i64..20, 1..6)) {
            let x = GLWeight::new(v);
            prop_assert_eq!(x.dualize().dualize(), x);
        }

        #[test]
        fn twist_is_a_group_action(v in prop::collection::vec(-20i64..20, 1..6), s in -9i64..9, t in -9i64..9) {
            let x = GLWeight::new(v);
            prop_assert_eq!(x.twist(0), x.clone());
            prop_assert_eq!(x.twist(s).twist(t), x.twist(s + t));
            prop_assert_eq!(x.twist(t).dualize(), x.dualize().twist(-t));
        }

        #[test]
        fn leq_is_a_partial_order(a in dominant3(), b in dominant3(), c in dominant3()) {
            prop_assert!(a.leq(&a).unwrap());
            if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if a.leq(&b).unwrap() && b.leq(&c).unwrap() {
                prop_assert!(a.leq(&c).unwrap());
            }
        }
    }
}
