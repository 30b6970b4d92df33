//! Compact hash keys for vectors over GF(q).

use crate::gf::Elem;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Key {
    Packed(u128),
    Wide(Box<[Elem]>),
}

/// Packs vectors of a fixed length into `u128` when they fit.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Packer {
    bits: u32,
    packed: bool,
}

impl Packer {
    pub fn new(q: u32, len: usize) -> Packer {
        let bits = 32 - (q - 1).leading_zeros();
        Packer { bits, packed: (bits as usize) * len <= 128 }
    }

    pub fn key(&self, x: &[Elem]) -> Key {
        if self.packed {
            Key::Packed(x.iter().enumerate().fold(0u128, |acc, (j, e)| acc | ((e.0 as u128) << (j as u32 * self.bits))))
        } else {
            Key::Wide(x.into())
        }
    }

    /// Key of `x` with coordinate `j` set to zero, derived from `key(x)`.
    pub fn without(&self, key: &Key, j: usize) -> Key {
        match key {
            Key::Packed(k) => {
                let mask = ((1u128 << self.bits) - 1) << (j as u32 * self.bits);
                Key::Packed(k & !mask)
            }
            Key::Wide(v) => {
                let mut v = v.clone();
                v[j] = Elem::ZERO;
                Key::Wide(v)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_and_wide_agree_on_equality() {
        let a = [Elem(3), Elem(0), Elem(1)];
        let b = [Elem(0), Elem(0), Elem(1)];
        for p in [Packer::new(4, 3), Packer { bits: 2, packed: false }] {
            assert_ne!(p.key(&a), p.key(&b));
            assert_eq!(p.without(&p.key(&a), 0), p.key(&b));
        }
        assert!(!Packer::new(4, 65).packed);
        assert!(Packer::new(4, 64).packed);
    }
}
