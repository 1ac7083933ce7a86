//! Arithmetic in the four smallest finite fields.
//!
//! Elements are the integers `0..q`. For prime `q` the operations are plain
//! modular arithmetic; the four-element field is not `Z/4` and uses its own
//! tables (elements encoded as polynomials over GF(2) modulo `x² + x + 1`,
//! so addition is bitwise xor).

use crate::error::GenError;

/// The four-element field's multiplication table.
const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

/// One of the fields with 2, 3, 4 or 5 elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Gf {
    q: u8,
}

impl Gf {
    pub(crate) fn new(q: u64) -> Result<Gf, GenError> {
        match q {
            2 | 3 | 4 | 5 => Ok(Gf { q: q as u8 }),
            other => Err(GenError::UnsupportedField(other)),
        }
    }

    pub(crate) fn q(self) -> usize {
        self.q as usize
    }

    pub(crate) fn add(self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    pub(crate) fn neg(self, a: u8) -> u8 {
        if self.q == 4 {
            a
        } else {
            (self.q - a) % self.q
        }
    }

    pub(crate) fn mul(self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            GF4_MUL[a as usize][b as usize]
        } else {
            (a * b) % self.q
        }
    }

    /// The multiplicative inverse of a nonzero element.
    pub(crate) fn inv(self, a: u8) -> u8 {
        assert_ne!(a, 0, "zero has no multiplicative inverse");
        (1..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .expect("every nonzero element of a finite field is invertible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Gf> {
        [2, 3, 4, 5].iter().map(|&q| Gf::new(q).unwrap()).collect()
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for f in fields() {
            let q = f.q() as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in the {}-element field",
                            q
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn the_four_element_field_is_not_modular_arithmetic() {
        let f = Gf::new(4).unwrap();
        assert_eq!(f.add(2, 2), 0, "characteristic 2");
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.inv(2), 3);
    }

    #[test]
    fn unsupported_sizes_are_rejected() {
        assert_eq!(Gf::new(6).unwrap_err(), GenError::UnsupportedField(6));
        assert_eq!(Gf::new(7).unwrap_err(), GenError::UnsupportedField(7));
    }
}
