//! The three pullback homomorphisms induced by Krichever-type embeddings of
//! moduli data into the Sato Grassmannian: the map attached to q-differentials
//! on one-pointed genus-g curves (q >= 2), its q = 1 counterpart with shifted
//! boundary behavior, and the map attached to degree-h line bundles on
//! one-pointed curves.
//!
//! Every map exists in two readings. The equivariant reading sends the
//! column class C_r to an explicit polynomial in the point class (psi or
//! omega) and the tautological bundle classes (Lambda_j or P_j): below the
//! component index d the image is an alternating convolution with complete
//! homogeneous symmetric functions of a block of consecutive integers, and
//! above d it is the elementary-symmetric analogue. The ordinary reading is
//! the point-class -> 0 shadow: c_r maps to (-1)^r times the r-th bundle
//! class, which vanishes above the bundle rank.
//!
//! Above the component index every term of the elementary-symmetric branch
//! is annihilated: the alphabet has r - d - 1 entries while the bundle class
//! index must stay within the rank, and the two bounds are incompatible, so
//! those images are exactly zero. The branch is still evaluated honestly
//! term by term rather than short-circuited, and [`PullbackMap::with_alternate_e_sign`]
//! toggles a sign reading of that branch that no surviving term can
//! distinguish.

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::Rat;
use crate::schubert::SchubertClass;
use crate::symfunc::{eval_e, eval_h};
use crate::taut::{hodge_rank, moduli_component_index, RingFlavor, TautRing};

/// Which embedding the map comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PullbackKind {
    /// q-differentials, q >= 2; target is the moduli ring with psi and the
    /// lambda classes of the q-differential Hodge bundle (rank = index d).
    Kq { q: u32 },
    /// Ordinary differentials; the Hodge bundle rank g exceeds the component
    /// index d = g - 1 by one, which shifts all boundary cases.
    K1,
    /// Degree-h line bundles, h > 2g - 2; target is the line-bundle ring
    /// with omega and P classes (rank = index d = h - g + 1).
    Line { h: u32 },
}

/// One pullback homomorphism with a fixed genus and equivariance reading.
#[derive(Clone, Debug)]
pub struct PullbackMap {
    kind: PullbackKind,
    g: u32,
    equivariant: bool,
    alternate_e_sign: bool,
    ring: TautRing,
}

impl PullbackMap {
    pub fn kq(q: u32, g: u32, equivariant: bool) -> Result<PullbackMap> {
        if q < 2 {
            return Err(Error::domain(format!(
                "the q-differential map needs q >= 2, got {q}; use the q = 1 map instead"
            )));
        }
        Ok(PullbackMap {
            kind: PullbackKind::Kq { q },
            g,
            equivariant,
            alternate_e_sign: false,
            ring: TautRing::moduli(g, q, None)?,
        })
    }

    pub fn k1(g: u32, equivariant: bool) -> Result<PullbackMap> {
        Ok(PullbackMap {
            kind: PullbackKind::K1,
            g,
            equivariant,
            alternate_e_sign: false,
            ring: TautRing::moduli(g, 1, None)?,
        })
    }

    pub fn line(g: u32, h: u32, equivariant: bool) -> Result<PullbackMap> {
        Ok(PullbackMap {
            kind: PullbackKind::Line { h },
            g,
            equivariant,
            alternate_e_sign: false,
            ring: TautRing::line_bundle(g, h, None)?,
        })
    }

    /// Opts into the sign-symmetrized reading of the elementary-symmetric
    /// branch (an inner (-1)^m on the q >= 2 map above the component index).
    /// Outputs cannot differ, every affected term vanishes, but the variant
    /// is kept explicit rather than silently collapsed.
    pub fn with_alternate_e_sign(mut self, on: bool) -> Self {
        self.alternate_e_sign = on;
        self
    }

    pub fn kind(&self) -> PullbackKind {
        self.kind
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariant
    }

    /// Target ring of the homomorphism.
    pub fn target_ring(&self) -> &TautRing {
        &self.ring
    }

    /// Index d of the Grassmannian component the source classes live on.
    pub fn component_index(&self) -> i64 {
        match self.kind {
            PullbackKind::Kq { q } => moduli_component_index(self.g, q),
            PullbackKind::K1 => moduli_component_index(self.g, 1),
            PullbackKind::Line { h } => (h - self.g + 1) as i64,
        }
    }

    /// Rank of the tautological bundle whose classes appear in the images.
    pub fn bundle_rank(&self) -> u32 {
        match self.kind {
            PullbackKind::Kq { q } => hodge_rank(self.g, q),
            PullbackKind::K1 => self.g,
            PullbackKind::Line { h } => h - self.g + 1,
        }
    }

    /// Lambda_j or P_j depending on the target ring, zero above the rank.
    fn bundle_class_or_zero(&self, j: u32) -> Result<GradedPoly> {
        match self.ring.flavor() {
            RingFlavor::ModuliQ { .. } => self.ring.lambda_or_zero(j),
            RingFlavor::LineBundle { .. } => self.ring.p_or_zero(j),
            _ => Err(Error::internal("pullback ring has no bundle classes")),
        }
    }

    /// `(-1)^r sum_{m+j=r} sign_m sym_m(alphabet) point^m class_j` where
    /// sym is h or e and sign_m is (-1)^m when `inner_sign` is set.
    fn branch_sum(
        &self,
        r: u32,
        alphabet: &[Rat],
        use_e: bool,
        inner_sign: bool,
    ) -> Result<GradedPoly> {
        let point = self.ring.point_class()?;
        let mut acc = self.ring.zero();
        for m in 0..=r {
            let j = r - m;
            let class = self.bundle_class_or_zero(j)?;
            if class.is_zero() {
                continue;
            }
            let sym = if use_e {
                eval_e(m as usize, alphabet)
            } else {
                eval_h(m as usize, alphabet)
            };
            if sym.is_zero() {
                continue;
            }
            let signed = if inner_sign && m % 2 == 1 { -sym } else { sym };
            acc = acc.add(&point.pow(m).mul(&class).scale(&signed));
        }
        Ok(if r % 2 == 1 { acc.neg() } else { acc })
    }

    fn alphabet(lo: i64, hi: i64) -> Vec<Rat> {
        (lo..=hi).map(Rat::from_int).collect()
    }

    fn generator_pullback_with(&self, r: u32, equivariant: bool) -> Result<GradedPoly> {
        if r == 0 {
            return Err(Error::domain("generator index r must be >= 1"));
        }
        if !equivariant {
            let class = self.bundle_class_or_zero(r)?;
            return Ok(if r % 2 == 1 { class.neg() } else { class });
        }
        let d = self.component_index();
        let ri = r as i64;
        match self.kind {
            PullbackKind::Kq { q } => {
                let q = q as i64;
                if ri <= d {
                    // Alphabet q, q+1, ..., q+d-r; never empty since r <= d.
                    self.branch_sum(r, &Self::alphabet(q, q + d - ri), false, true)
                } else {
                    // Alphabet q-r+d+1, ..., q-1 of size r-d-1, as printed
                    // without the inner sign unless the variant is chosen.
                    self.branch_sum(
                        r,
                        &Self::alphabet(q - ri + d + 1, q - 1),
                        true,
                        self.alternate_e_sign,
                    )
                }
            }
            PullbackKind::K1 => {
                let g = self.g as i64;
                if ri <= g - 1 {
                    self.branch_sum(r, &Self::alphabet(1, g - ri), false, true)
                } else if ri == g {
                    // Definitional boundary value (-1)^g Lambda_g.
                    let top = self.ring.lambda_or_zero(r)?;
                    Ok(if r % 2 == 1 { top.neg() } else { top })
                } else if ri == g + 1 {
                    Ok(self.ring.zero())
                } else {
                    self.branch_sum(r, &Self::alphabet(1, ri - g - 1), true, true)
                }
            }
            PullbackKind::Line { .. } => {
                if ri <= d {
                    self.branch_sum(r, &Self::alphabet(1, d - ri), false, true)
                } else {
                    self.branch_sum(r, &Self::alphabet(1, ri - d - 1), true, true)
                }
            }
        }
    }

    /// Image of the r-th column generator: the equivariant class C_r or the
    /// ordinary Chern class c_r according to the map's reading. Homogeneous
    /// of weight r.
    pub fn generator_pullback(&self, r: u32) -> Result<GradedPoly> {
        self.generator_pullback_with(r, self.equivariant)
    }

    /// Pullback of a Schur-basis class. Ordinary maps expand the class as a
    /// polynomial in the column generators and substitute; equivariant maps
    /// accept only column-supported classes, since expressing a general
    /// equivariant Schubert class in the C_r is out of scope here.
    pub fn class_pullback(&self, class: &SchubertClass) -> Result<GradedPoly> {
        if class.d() != self.component_index() {
            return Err(Error::domain(format!(
                "class lives on component d = {}, map pulls back from d = {}",
                class.d(),
                self.component_index()
            )));
        }
        if self.equivariant {
            let mut acc = self.ring.zero();
            for (lambda, coeff) in class.terms() {
                if lambda.parts().iter().any(|&p| p != 1) {
                    return Err(Error::domain(format!(
                        "equivariant pullback supports only column classes, got sigma_{lambda}"
                    )));
                }
                let image = if lambda.len() == 0 {
                    self.ring.one()
                } else {
                    self.generator_pullback(lambda.len() as u32)?
                };
                acc = acc.add(&image.scale(coeff));
            }
            return Ok(acc);
        }
        let expanded = class.expand_in_generators(None)?;
        self.substitute_column_poly(&expanded)
    }

    /// Pullback of a polynomial in the column generators c_1 .. c_n and,
    /// on equivariant maps, the circle variable u (sent to minus the point
    /// class).
    pub fn poly_pullback(&self, poly: &GradedPoly) -> Result<GradedPoly> {
        self.substitute_column_poly(poly)
    }

    fn substitute_column_poly(&self, poly: &GradedPoly) -> Result<GradedPoly> {
        let table = poly.table();
        let mut images = Vec::with_capacity(table.len());
        for gen in table.gens() {
            if gen.name() == "u" {
                if gen.weight() != 1 {
                    return Err(Error::domain("u must have weight 1"));
                }
                if !self.equivariant {
                    return Err(Error::domain(
                        "u is an equivariant variable; this map is ordinary",
                    ));
                }
                images.push(self.ring.point_class()?.neg());
                continue;
            }
            let Some(k) = gen
                .name()
                .strip_prefix("c_")
                .and_then(|s| s.parse::<u32>().ok())
                .filter(|&k| k >= 1 && gen.weight() == k)
            else {
                return Err(Error::domain(format!(
                    "generator {:?} is not a column generator c_k or u",
                    gen.name()
                )));
            };
            images.push(self.generator_pullback(k)?);
        }
        poly.substitute_with(self.ring.table(), self.ring.cap(), &images)
    }

    /// True when the equivariant image of the r-th generator, with the point
    /// class sent to zero, equals the ordinary image. Independent of the
    /// map's own equivariance reading.
    pub fn equivariant_limit_check(&self, r: u32) -> Result<bool> {
        if r == 0 {
            return Err(Error::domain("generator index r must be >= 1"));
        }
        let eq = self.generator_pullback_with(r, true)?;
        let table = self.ring.table();
        let point_idx = match self.ring.flavor() {
            RingFlavor::LineBundle { .. } => table.index_of("omega"),
            _ => table.index_of("psi"),
        }
        .ok_or_else(|| Error::internal("target ring lost its point class"))?;
        let images = (0..table.len())
            .map(|k| {
                if k == point_idx {
                    Ok(GradedPoly::zero(table, self.ring.cap()))
                } else {
                    GradedPoly::generator(table, self.ring.cap(), k)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let shadow = eq.substitute_with(table, self.ring.cap(), &images)?;
        Ok(shadow == self.generator_pullback_with(r, false)?)
    }
}
