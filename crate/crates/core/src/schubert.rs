//! The cohomology of the Sato Grassmannian in the Schur basis.
//!
//! A class is a finite rational linear combination of Schubert classes
//! `sigma_lambda`, one per partition; the component index `d` rides along as
//! metadata (it selects the Maya encoding of the labels but never changes
//! products). Multiplication is Littlewood-Richardson. `expand_in_generators`
//! rewrites a class as a polynomial in the column classes
//! `c_r = sigma_(1^r)` through the dual Jacobi-Trudi determinant, and
//! `eval_generator_poly` maps such a polynomial back; the two are mutually
//! inverse, which the test suites exercise.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{MayaSequence, Partition};
use crate::poly::{GenTable, GradedPoly};
use crate::rational::Rat;
use crate::symfunc::{dual_jacobi_trudi, lr_coefficients};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    d: i64,
    terms: BTreeMap<Partition, Rat>,
}

impl SchubertClass {
    pub fn zero(d: i64) -> Self {
        SchubertClass { d, terms: BTreeMap::new() }
    }

    pub fn unit(d: i64) -> Self {
        SchubertClass::sigma(d, Partition::empty())
    }

    /// The basis class `sigma_lambda` on component `d`.
    pub fn sigma(d: i64, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rat::one());
        SchubertClass { d, terms }
    }

    /// The class of the cell described by a Maya sequence.
    pub fn from_maya(maya: &MayaSequence) -> Self {
        SchubertClass::sigma(maya.d(), maya.to_partition())
    }

    pub fn from_terms<I>(d: i64, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rat)>,
    {
        let mut class = SchubertClass::zero(d);
        for (lambda, coeff) in terms {
            class.add_term(lambda, coeff);
        }
        class
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical listing order (descending lexicographic labels).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    fn check_component(&self, rhs: &SchubertClass) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::domain(format!(
                "classes on different components: d = {} vs {}",
                self.d, rhs.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &SchubertClass) -> Result<SchubertClass> {
        self.check_component(rhs)?;
        let mut out = self.clone();
        for (lambda, coeff) in &rhs.terms {
            out.add_term(lambda.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &SchubertClass) -> SchubertClass {
        self.checked_add(rhs).expect("component mismatch")
    }

    pub fn neg(&self) -> SchubertClass {
        SchubertClass {
            d: self.d,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &SchubertClass) -> SchubertClass {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> SchubertClass {
        if c.is_zero() {
            return SchubertClass::zero(self.d);
        }
        SchubertClass {
            d: self.d,
            terms: self.terms.iter().map(|(l, k)| (l.clone(), k * c)).collect(),
        }
    }

    /// Littlewood-Richardson product.
    pub fn checked_mul(&self, rhs: &SchubertClass) -> Result<SchubertClass> {
        self.check_component(rhs)?;
        let mut out = SchubertClass::zero(self.d);
        for (lambda, ca) in &self.terms {
            for (mu, cb) in &rhs.terms {
                let coeff = ca * cb;
                for (nu, mult) in lr_coefficients(lambda, mu) {
                    out.add_term(nu, &coeff * &Rat::from_int(mult as i64));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &SchubertClass) -> SchubertClass {
        self.checked_mul(rhs).expect("component mismatch")
    }

    pub fn max_codim(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// True when every label has size `w` (vacuously for zero).
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|l| l.size() == w)
    }

    pub fn homogeneous_part(&self, w: u32) -> SchubertClass {
        SchubertClass {
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == w)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rewrites the class as a polynomial in the column classes
    /// `c_r = sigma_(1^r)`, over the table `c_1 .. c_n`. With `num_gens =
    /// None` the table is sized to the largest label in the support (the
    /// dual Jacobi-Trudi determinant for `lambda` never needs an index above
    /// `|lambda|`).
    pub fn expand_in_generators(&self, num_gens: Option<usize>) -> Result<GradedPoly> {
        let needed = self.max_codim().unwrap_or(0).max(1) as usize;
        let n = match num_gens {
            Some(n) => {
                if n < needed {
                    return Err(Error::domain(format!(
                        "need at least {needed} column generators, got {n}"
                    )));
                }
                n
            }
            None => needed,
        };
        let table = GenTable::graded_prefix("c", n);
        let mut out = GradedPoly::zero(&table, None);
        for (lambda, coeff) in &self.terms {
            let det = dual_jacobi_trudi(lambda, &table, None)?;
            out = out.add(&det.scale(coeff));
        }
        Ok(out)
    }

    /// Evaluates a polynomial over a column-generator table `c_1 .. c_n`
    /// back to a class on component `d`: `c_r` maps to `sigma_(1^r)`,
    /// monomials multiply through Littlewood-Richardson.
    pub fn eval_generator_poly(poly: &GradedPoly, d: i64) -> Result<SchubertClass> {
        for (i, g) in poly.table().gens().iter().enumerate() {
            let w = i as u32 + 1;
            if g.weight() != w || g.name() != format!("c_{w}") {
                return Err(Error::domain(
                    "expected a column-generator table c_1 .. c_n with weights 1..n",
                ));
            }
        }
        let mut out = SchubertClass::zero(d);
        for (exps, coeff) in poly.terms() {
            let mut acc = SchubertClass::unit(d);
            for (i, &e) in exps.iter().enumerate() {
                let col = SchubertClass::sigma(d, Partition::column(i as u32 + 1));
                for _ in 0..e {
                    acc = acc.mul(&col);
                }
            }
            out = out.add(&acc.scale(coeff));
        }
        Ok(out)
    }
}

impl std::fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, coeff) in self.terms() {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}*")?;
                } else {
                    write!(f, "({mag})*")?;
                }
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

impl Serialize for SchubertClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermJson<'a> {
            partition: &'a Partition,
            coeff: &'a Rat,
        }
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(partition, coeff)| TermJson { partition, coeff })
            .collect();
        let mut st = serializer.serialize_struct("SchubertClass", 2)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchubertClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct TermJson {
            partition: Partition,
            coeff: Rat,
        }
        #[derive(Deserialize)]
        struct ClassJson {
            d: i64,
            terms: Vec<TermJson>,
        }
        let raw = ClassJson::deserialize(deserializer)?;
        let mut class = SchubertClass::zero(raw.d);
        for t in raw.terms {
            if t.coeff.is_zero() {
                return Err(D::Error::custom("zero coefficient in serialized class"));
            }
            class.add_term(t.partition, t.coeff);
        }
        Ok(class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_square() {
        let s1 = SchubertClass::sigma(0, p(&[1]));
        let sq = s1.mul(&s1);
        assert_eq!(sq.coeff(&p(&[2])), Rat::one());
        assert_eq!(sq.coeff(&p(&[1, 1])), Rat::one());
        assert_eq!(sq.num_terms(), 2);
        assert!(sq.is_homogeneous_of(2));
        assert_eq!(sq.to_string(), "s(2) + s(1,1)");
    }

    #[test]
    fn component_mismatch_is_an_error() {
        let a = SchubertClass::sigma(0, p(&[1]));
        let b = SchubertClass::sigma(1, p(&[1]));
        assert!(a.checked_mul(&b).is_err());
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn expand_columns_and_rows() {
        // sigma_(1^r) expands to the single generator c_r.
        let col = SchubertClass::sigma(0, Partition::column(3));
        let poly = col.expand_in_generators(None).unwrap();
        assert_eq!(poly.num_terms(), 1);
        assert_eq!(poly.coeff(&[0, 0, 1]), Rat::one());
        // sigma_(2) = c_1^2 - c_2.
        let row = SchubertClass::sigma(0, p(&[2]));
        let poly = row.expand_in_generators(None).unwrap();
        assert_eq!(poly.coeff(&[2, 0]), Rat::one());
        assert_eq!(poly.coeff(&[0, 1]), Rat::from_int(-1));
        assert_eq!(poly.num_terms(), 2);
    }

    #[test]
    fn expand_then_eval_round_trips() {
        let class = SchubertClass::from_terms(
            0,
            [
                (p(&[3, 1]), Rat::from_int(2)),
                (p(&[2, 2]), Rat::new(-1, 3).unwrap()),
                (Partition::empty(), Rat::one()),
            ],
        );
        let poly = class.expand_in_generators(None).unwrap();
        let back = SchubertClass::eval_generator_poly(&poly, 0).unwrap();
        assert_eq!(back, class);
    }

    #[test]
    fn maya_constructor_matches_partition() {
        let maya = p(&[2]).to_maya(0);
        let class = SchubertClass::from_maya(&maya);
        assert_eq!(class, SchubertClass::sigma(0, p(&[2])));
    }

    #[test]
    fn json_round_trip_and_order() {
        let class = SchubertClass::from_terms(
            0,
            [(p(&[2]), Rat::one()), (p(&[1, 1]), Rat::one())],
        );
        let s = serde_json::to_string(&class).unwrap();
        // Canonical listing order: descending lexicographic, (2) before (1,1).
        assert_eq!(
            s,
            "{\"d\":0,\"terms\":[{\"partition\":[2],\"coeff\":\"1\"},{\"partition\":[1,1],\"coeff\":\"1\"}]}"
        );
        let back: SchubertClass = serde_json::from_str(&s).unwrap();
        assert_eq!(back, class);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
