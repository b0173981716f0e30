//! Involutive anti-automorphisms of the matrix algebra, acting on matrix units.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::key::{Ambient, BasisKey, Grading};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Involution {
    /// `A -> A^t`.
    Transpose,
    /// `A -> S A^t S^{-1}` with `S` block-diagonal, each block `[[0, I_h], [-I_h, 0]]`.
    /// Blocks are `(offset, half)`: indices `offset+1 ..= offset+2*half`.
    Symplectic { blocks: Vec<(u16, u16)> },
}

impl Involution {
    /// The grading-preserving symplectic involution: one block for the trivial
    /// grading, one per graded block otherwise. Every block size must be even.
    pub fn symplectic(ambient: &Ambient) -> Result<Self> {
        let sizes: Vec<(u16, u16)> = match ambient.grading {
            Grading::Trivial => vec![(0, ambient.k)],
            Grading::Split { k1 } => vec![(0, k1), (k1, ambient.k - k1)],
        };
        if let Some((_, odd)) = sizes.iter().find(|(_, s)| s % 2 == 1) {
            return Err(Error::InvalidFamily(format!(
                "symplectic involution needs even block sizes, got {odd} in {ambient}"
            )));
        }
        Ok(Involution::Symplectic { blocks: sizes.into_iter().map(|(o, s)| (o, s / 2)).collect() })
    }

    /// Partner index and sign: within a block, the first half maps forward with sign -1
    /// and the second half maps back with sign +1.
    fn partner(blocks: &[(u16, u16)], x: u16) -> Result<(i8, u16)> {
        for &(offset, half) in blocks {
            if x > offset && x <= offset + 2 * half {
                return Ok(if x - offset <= half { (-1, x + half) } else { (1, x - half) });
            }
        }
        Err(Error::InvalidFamily(format!("index {x} is outside every symplectic block")))
    }

    /// `sigma(E_{p,q})` as a signed unit.
    pub fn apply_unit(&self, p: u16, q: u16) -> Result<(i8, u16, u16)> {
        match self {
            Involution::Transpose => Ok((1, q, p)),
            Involution::Symplectic { blocks } => {
                let (sp, p2) = Self::partner(blocks, p)?;
                let (sq, q2) = Self::partner(blocks, q)?;
                Ok((sp * sq, q2, p2))
            }
        }
    }

    /// `sigma` applied to the unit of a key, other indices unchanged.
    pub fn apply(&self, key: &BasisKey) -> Result<(i8, BasisKey)> {
        let (s, p, q) = self.apply_unit(key.p, key.q)?;
        Ok((s, BasisKey { p, q, ..*key }))
    }

    /// The fixed-point partner of `u_{[i,j]}(m,n)`: `(-1)^{ij} sigma(u)_{[j,i]}(n,m)`.
    pub fn fixed_point_partner(&self, key: &BasisKey) -> Result<(i8, BasisKey)> {
        let (s, p, q) = self.apply_unit(key.p, key.q)?;
        let block_sign = if key.i * key.j == 1 { -1 } else { 1 };
        Ok((s * block_sign, BasisKey { i: key.j, j: key.i, p, q, m: key.n, n: key.m }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_units() {
        assert_eq!(Involution::Transpose.apply_unit(1, 2).unwrap(), (1, 2, 1));
    }

    #[test]
    fn symplectic_k2() {
        let s = Involution::symplectic(&Ambient::trivial(2).unwrap()).unwrap();
        assert_eq!(s.apply_unit(1, 1).unwrap(), (1, 2, 2));
        assert_eq!(s.apply_unit(1, 2).unwrap(), (-1, 1, 2));
        assert_eq!(s.apply_unit(2, 1).unwrap(), (-1, 2, 1));
        assert!(Involution::symplectic(&Ambient::trivial(3).unwrap()).is_err());
        assert!(Involution::symplectic(&Ambient::split(2, 1).unwrap()).is_err());
    }

    fn units_mul(a: (u16, u16), b: (u16, u16)) -> Option<(u16, u16)> {
        (a.1 == b.0).then_some((a.0, b.1))
    }

    fn check_anti_involution(s: &Involution, k: u16) {
        for p in 1..=k {
            for q in 1..=k {
                let (s1, p1, q1) = s.apply_unit(p, q).unwrap();
                let (s2, p2, q2) = s.apply_unit(p1, q1).unwrap();
                assert_eq!((s1 * s2, p2, q2), (1, p, q));
                // sigma(uv) = sigma(v) sigma(u)
                for r in 1..=k {
                    for t in 1..=k {
                        let lhs = units_mul((p, q), (r, t)).map(|(a, b)| s.apply_unit(a, b).unwrap());
                        let (su, a1, b1) = s.apply_unit(p, q).unwrap();
                        let (sv, a2, b2) = s.apply_unit(r, t).unwrap();
                        let rhs = units_mul((a2, b2), (a1, b1)).map(|(a, b)| (su * sv, a, b));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn involutions_are_anti_involutive() {
        check_anti_involution(&Involution::Transpose, 3);
        check_anti_involution(&Involution::symplectic(&Ambient::trivial(4).unwrap()).unwrap(), 4);
        check_anti_involution(&Involution::symplectic(&Ambient::split(2, 2).unwrap()).unwrap(), 4);
    }

    #[test]
    fn graded_symplectic_preserves_grading() {
        let amb = Ambient::split(2, 4).unwrap();
        let s = Involution::symplectic(&amb).unwrap();
        for p in 1..=6 {
            for q in 1..=6 {
                let (_, p2, q2) = s.apply_unit(p, q).unwrap();
                assert_eq!(amb.unit_parity(p, q), amb.unit_parity(p2, q2));
            }
        }
    }
}
