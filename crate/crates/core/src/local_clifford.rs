//! Single-qubit Clifford operators modulo global phase (24 elements).
//!
//! An element is stored by its conjugation action: the signed Pauli images
//! of `X` and `Z`. The six elements `S^q` (`q = 0..3`) and `H·S^q`
//! (`q ∈ {0, 2}`) are the ones a canonical diagram may carry on a node:
//! `S^q` is a phase of `q·π/2` on the node and the `H` is a Hadamard on its
//! free edge.

use std::fmt;
use std::sync::OnceLock;

/// A Hermitian single-qubit Pauli `±σ(x, z)` (`σ(1,1) = Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pub x: bool,
    pub z: bool,
    pub negative: bool,
}

impl SignedPauli {
    pub const X: SignedPauli = SignedPauli {
        x: true,
        z: false,
        negative: false,
    };
    pub const Z: SignedPauli = SignedPauli {
        x: false,
        z: true,
        negative: false,
    };

    fn is_identity(self) -> bool {
        !self.x && !self.z
    }

    fn neg(self) -> SignedPauli {
        SignedPauli {
            negative: !self.negative,
            ..self
        }
    }
}

/// Phase exponent of `i` in the product `σ(a) σ(b) = i^e σ(a ⊕ b)`.
fn product_phase(ax: bool, az: bool, bx: bool, bz: bool) -> u8 {
    // i^{xz} X^x Z^z form; moving Z^az past X^bx costs a sign.
    let ya = (ax && az) as u8;
    let yb = (bx && bz) as u8;
    let swap = (az && bx) as u8;
    let y = ((ax ^ bx) && (az ^ bz)) as u8;
    (ya + yb + 2 * swap + 4 - y) % 4
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalClifford {
    x_image: SignedPauli,
    z_image: SignedPauli,
}

impl LocalClifford {
    pub const I: LocalClifford = LocalClifford {
        x_image: SignedPauli::X,
        z_image: SignedPauli::Z,
    };
    pub const H: LocalClifford = LocalClifford {
        x_image: SignedPauli::Z,
        z_image: SignedPauli::X,
    };
    /// `S = diag(1, i)`: `X ↦ Y`.
    pub const S: LocalClifford = LocalClifford {
        x_image: SignedPauli {
            x: true,
            z: true,
            negative: false,
        },
        z_image: SignedPauli::Z,
    };
    pub const S_DAG: LocalClifford = LocalClifford {
        x_image: SignedPauli {
            x: true,
            z: true,
            negative: true,
        },
        z_image: SignedPauli::Z,
    };
    pub const X: LocalClifford = LocalClifford {
        x_image: SignedPauli::X,
        z_image: SignedPauli {
            x: false,
            z: true,
            negative: true,
        },
    };
    pub const Z: LocalClifford = LocalClifford {
        x_image: SignedPauli {
            x: true,
            z: false,
            negative: true,
        },
        z_image: SignedPauli::Z,
    };

    /// Builds an element from the images of `X` and `Z`; `None` unless the
    /// images are non-identity and anticommute.
    pub fn from_images(x_image: SignedPauli, z_image: SignedPauli) -> Option<Self> {
        if x_image.is_identity() || z_image.is_identity() {
            return None;
        }
        if (x_image.x, x_image.z) == (z_image.x, z_image.z) {
            return None;
        }
        Some(LocalClifford { x_image, z_image })
    }

    pub fn x_image(self) -> SignedPauli {
        self.x_image
    }

    pub fn z_image(self) -> SignedPauli {
        self.z_image
    }

    /// The 2×2 symplectic matrix `[[x_image.x, z_image.x], [x_image.z, z_image.z]]`.
    pub fn symplectic(self) -> [[bool; 2]; 2] {
        [
            [self.x_image.x, self.z_image.x],
            [self.x_image.z, self.z_image.z],
        ]
    }

    /// `L σ L†` for a Hermitian Pauli `σ`.
    pub fn apply(self, p: SignedPauli) -> SignedPauli {
        let img = match (p.x, p.z) {
            (false, false) => return p,
            (true, false) => self.x_image,
            (false, true) => self.z_image,
            (true, true) => {
                // Y = i·X·Z, so L(Y) = i·L(X)·L(Z)
                let (a, b) = (self.x_image, self.z_image);
                let e = 1
                    + 2 * (a.negative as u8)
                    + 2 * (b.negative as u8)
                    + product_phase(a.x, a.z, b.x, b.z);
                debug_assert_eq!(e % 2, 0);
                SignedPauli {
                    x: a.x ^ b.x,
                    z: a.z ^ b.z,
                    negative: e % 4 == 2,
                }
            }
        };
        if p.negative {
            img.neg()
        } else {
            img
        }
    }

    /// Operator product `self · other` (`other` acts first).
    pub fn compose(self, other: LocalClifford) -> LocalClifford {
        LocalClifford {
            x_image: self.apply(other.x_image),
            z_image: self.apply(other.z_image),
        }
    }

    pub fn inverse(self) -> LocalClifford {
        *all()
            .iter()
            .find(|c| c.compose(self) == LocalClifford::I)
            .expect("group is closed")
    }

    /// `H^had · S^phase`; `phase` is taken mod 4.
    pub fn from_zx(had: bool, phase: u8) -> LocalClifford {
        let mut l = LocalClifford::I;
        for _ in 0..phase % 4 {
            l = LocalClifford::S.compose(l);
        }
        if had {
            l = LocalClifford::H.compose(l);
        }
        l
    }

    /// `(had, phase)` if this is one of the six node decorations allowed in
    /// a canonical diagram.
    pub fn to_zx(self) -> Option<(bool, u8)> {
        legal_six()
            .iter()
            .find(|(_, _, c)| *c == self)
            .map(|&(h, q, _)| (h, q))
    }

    pub fn is_legal(self) -> bool {
        self.to_zx().is_some()
    }

    /// A gate word (`'H'`/`'S'`, in time order) implementing this element.
    pub fn word(self) -> &'static [char] {
        &table()
            .iter()
            .find(|(c, _)| *c == self)
            .expect("every element is reachable")
            .1
    }
}

impl fmt::Debug for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: SignedPauli| {
            format!(
                "{}{}",
                if p.negative { "-" } else { "+" },
                crate::pauli::Letter::from_bits(p.x, p.z).as_char()
            )
        };
        match self.to_zx() {
            Some((h, q)) => write!(f, "LC({}S^{q})", if h { "H·" } else { "" }),
            None => write!(
                f,
                "LC(X→{}, Z→{})",
                show(self.x_image),
                show(self.z_image)
            ),
        }
    }
}

fn table() -> &'static Vec<(LocalClifford, Vec<char>)> {
    static TABLE: OnceLock<Vec<(LocalClifford, Vec<char>)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut seen = vec![(LocalClifford::I, Vec::new())];
        let mut frontier = 0;
        while frontier < seen.len() {
            let (c, w) = seen[frontier].clone();
            for (g, name) in [(LocalClifford::H, 'H'), (LocalClifford::S, 'S')] {
                let next = g.compose(c);
                if !seen.iter().any(|(e, _)| *e == next) {
                    let mut word = w.clone();
                    word.push(name);
                    seen.push((next, word));
                }
            }
            frontier += 1;
        }
        seen
    })
}

/// All 24 elements.
pub fn all() -> Vec<LocalClifford> {
    table().iter().map(|(c, _)| *c).collect()
}

fn legal_six() -> &'static [(bool, u8, LocalClifford); 6] {
    static SIX: OnceLock<[(bool, u8, LocalClifford); 6]> = OnceLock::new();
    SIX.get_or_init(|| {
        [
            (false, 0, LocalClifford::from_zx(false, 0)),
            (false, 1, LocalClifford::from_zx(false, 1)),
            (false, 2, LocalClifford::from_zx(false, 2)),
            (false, 3, LocalClifford::from_zx(false, 3)),
            (true, 0, LocalClifford::from_zx(true, 0)),
            (true, 2, LocalClifford::from_zx(true, 2)),
        ]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_has_24_elements() {
        let els = all();
        assert_eq!(els.len(), 24);
        for a in &els {
            for b in &els {
                assert!(els.contains(&a.compose(*b)));
            }
            assert_eq!(a.compose(a.inverse()), LocalClifford::I);
        }
    }

    #[test]
    fn named_elements() {
        assert_eq!(LocalClifford::S.compose(LocalClifford::S), LocalClifford::Z);
        assert_eq!(LocalClifford::H.compose(LocalClifford::H), LocalClifford::I);
        assert_eq!(
            LocalClifford::S.compose(LocalClifford::S_DAG),
            LocalClifford::I
        );
        assert_eq!(
            LocalClifford::H
                .compose(LocalClifford::Z)
                .compose(LocalClifford::H),
            LocalClifford::X
        );
    }

    #[test]
    fn y_images() {
        let y = SignedPauli {
            x: true,
            z: true,
            negative: false,
        };
        // H Y H = -Y, S Y S† = -X
        assert_eq!(LocalClifford::H.apply(y), SignedPauli { negative: true, ..y });
        assert_eq!(
            LocalClifford::S.apply(y),
            SignedPauli {
                x: true,
                z: false,
                negative: true
            }
        );
    }

    #[test]
    fn legal_six_are_distinct_and_recognised() {
        let legal: Vec<_> = all().into_iter().filter(|c| c.is_legal()).collect();
        assert_eq!(legal.len(), 6);
        assert_eq!(LocalClifford::I.to_zx(), Some((false, 0)));
        assert_eq!(LocalClifford::S.to_zx(), Some((false, 1)));
        assert_eq!(LocalClifford::Z.to_zx(), Some((false, 2)));
        assert_eq!(LocalClifford::S_DAG.to_zx(), Some((false, 3)));
        assert_eq!(LocalClifford::H.to_zx(), Some((true, 0)));
        assert_eq!(
            LocalClifford::H.compose(LocalClifford::Z).to_zx(),
            Some((true, 2))
        );
        assert_eq!(LocalClifford::H.compose(LocalClifford::S).to_zx(), None);
    }

    #[test]
    fn from_images_rejects_non_clifford() {
        assert!(LocalClifford::from_images(SignedPauli::X, SignedPauli::X).is_none());
        assert!(LocalClifford::from_images(SignedPauli::Z, SignedPauli::X).is_some());
    }
}
