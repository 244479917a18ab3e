//! The irreducible character table of A(n, θ), over ℤ[i].
//!
//! There are 2^n linear characters λ_c(a, b) = (−1)^{Tr(c·a)} and, for each
//! nonzero a, a pair χ^± of degree 2^m supported on the center and on the two
//! classes over a, with values in {±2^m, ±2^m·i}. Values are computed on
//! demand from the character's kind; nothing quadratic in the class count is
//! stored unless a caller asks for the dense table.

use crate::gaussian::{GaussianInt, GI_ZERO};
use crate::gf2n::FieldElement;
use crate::group::{ConnectionSet, GroupElement, SuzukiGroup};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exhaustive table-wide work (orthogonality, dense export) is cubic to
/// quadratic in the class count; cap it while leaving per-value queries
/// available at every supported n.
pub const MAX_DENSE_TABLE_N: u32 = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("dense character table limited to n ≤ {MAX_DENSE_TABLE_N}")]
    DenseTableTooLarge,
    #[error("imported table malformed: {reason}")]
    MalformedImport { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharKind {
    /// λ_c(a, b) = (−1)^{Tr(c·a)}; trivial on the center.
    Linear { c: FieldElement },
    /// Degree-2^m character anchored at the class `coset_rep_class_id`,
    /// where its value is sign·2^m·i; the opposite value on the inverse
    /// class, ±2^m on the center by M_x membership, zero elsewhere.
    Nonlinear { coset_rep_class_id: u32, sign: Sign },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub id: u32,
    pub degree: u64,
    pub kind: CharKind,
}

/// The complete table: one character per conjugacy class. Immutable after
/// construction; value queries are O(n) bit work.
#[derive(Debug, Clone)]
pub struct CharacterTable<'g> {
    group: &'g SuzukiGroup,
    characters: Vec<Character>,
}

/// Per-relation outcome of the exact orthogonality checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub rows_ok: bool,
    pub columns_ok: bool,
    pub degree_sum_ok: bool,
}

impl OrthogonalityReport {
    pub fn all_ok(&self) -> bool {
        self.rows_ok && self.columns_ok && self.degree_sum_ok
    }
}

/// The 2^n linear characters, in ascending order of c. λ_0 is trivial.
pub fn linear_characters(group: &SuzukiGroup) -> Vec<Character> {
    group
        .field()
        .elements()
        .map(|c| Character {
            id: 0,
            degree: 1,
            kind: CharKind::Linear { c },
        })
        .collect()
}

/// The 2(2^n − 1) nonlinear characters, a (+, −) pair per nonzero a in
/// ascending a order. Each pair is anchored at a canonical class over its a:
/// the connected class when a connection set is supplied, otherwise the class
/// of the lex-least order-4 element (a, 0). The + character takes value
/// +2^m·i on the anchor.
pub fn nonlinear_characters(group: &SuzukiGroup, conn: Option<&ConnectionSet>) -> Vec<Character> {
    let degree = 1u64 << group.field().m();
    let mut out = Vec::with_capacity(2 * (group.field().field_size() as usize - 1));
    for a_bits in 1..group.field().field_size() {
        let a = FieldElement::new_unchecked(a_bits);
        let mut anchor = group.class_id_of(GroupElement::new(a, FieldElement::ZERO));
        if let Some(c) = conn {
            if !c.contains_class(anchor) {
                anchor = group.class(anchor).inverse_class_id;
            }
        }
        for sign in [Sign::Plus, Sign::Minus] {
            out.push(Character {
                id: 0,
                degree,
                kind: CharKind::Nonlinear {
                    coset_rep_class_id: anchor,
                    sign,
                },
            });
        }
    }
    out
}

impl<'g> CharacterTable<'g> {
    /// Assembles the full table: linear characters first, then the nonlinear
    /// pairs. Ids follow that order.
    pub fn new(group: &'g SuzukiGroup, conn: Option<&ConnectionSet>) -> CharacterTable<'g> {
        let mut characters = linear_characters(group);
        characters.extend(nonlinear_characters(group, conn));
        for (i, ch) in characters.iter_mut().enumerate() {
            ch.id = i as u32;
        }
        debug_assert_eq!(characters.len(), group.class_count());
        CharacterTable { group, characters }
    }

    pub fn group(&self) -> &'g SuzukiGroup {
        self.group
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, id: u32) -> &Character {
        &self.characters[id as usize]
    }

    pub fn class_count(&self) -> usize {
        self.group.class_count()
    }

    /// χ_r evaluated on class j (the common value of its members, not the
    /// class sum).
    pub fn value(&self, char_id: u32, class_id: u32) -> GaussianInt {
        let ch = &self.characters[char_id as usize];
        let class = self.group.class(class_id);
        match ch.kind {
            CharKind::Linear { c } => {
                let f = self.group.field();
                if f.trace(f.mul(c, class.rep.a)) == 0 {
                    GaussianInt::real(1)
                } else {
                    GaussianInt::real(-1)
                }
            }
            CharKind::Nonlinear {
                coset_rep_class_id,
                sign,
            } => {
                let d = ch.degree as i64;
                let anchor = self.group.class(coset_rep_class_id);
                if class_id == coset_rep_class_id {
                    return GaussianInt::imag(sign.unit() * d);
                }
                if class_id == anchor.inverse_class_id {
                    return GaussianInt::imag(-sign.unit() * d);
                }
                if class.is_central {
                    let plane = self
                        .group
                        .hyperplane(anchor.rep)
                        .expect("anchor class is noncentral");
                    if plane.contains(class.rep.b) {
                        GaussianInt::real(d)
                    } else {
                        GaussianInt::real(-d)
                    }
                } else {
                    GI_ZERO
                }
            }
        }
    }

    /// One character's value on every class, in class-id order.
    pub fn values_of(&self, char_id: u32) -> Vec<GaussianInt> {
        (0..self.class_count() as u32)
            .map(|j| self.value(char_id, j))
            .collect()
    }

    fn dense_values(&self) -> Result<Vec<Vec<GaussianInt>>, CharError> {
        if self.group.n() > MAX_DENSE_TABLE_N {
            return Err(CharError::DenseTableTooLarge);
        }
        Ok((0..self.characters.len() as u32)
            .map(|r| self.values_of(r))
            .collect())
    }

    /// Exact first and second orthogonality relations plus the degree-squared
    /// sum, all in ℤ[i].
    pub fn verify_orthogonality(&self) -> Result<OrthogonalityReport, CharError> {
        let rows = self.dense_values()?;
        let sizes: Vec<i64> = self.group.classes().iter().map(|c| c.size as i64).collect();
        let order = self.group.order() as i64;
        let k = rows.len();

        let rows_ok = (0..k)
            .into_par_iter()
            .all(|r| {
                (r..k).all(|s| {
                    let mut acc = GI_ZERO;
                    for j in 0..k {
                        acc += rows[r][j] * rows[s][j].conj() * sizes[j];
                    }
                    let expect = if r == s { order } else { 0 };
                    acc == GaussianInt::real(expect)
                })
            });

        let columns_ok = (0..k)
            .into_par_iter()
            .all(|i| {
                (i..k).all(|j| {
                    let mut acc = GI_ZERO;
                    for row in &rows {
                        acc += row[i] * row[j].conj();
                    }
                    let expect = if i == j { order / sizes[i] } else { 0 };
                    acc == GaussianInt::real(expect)
                })
            });

        let degree_sum: u64 = self.characters.iter().map(|c| c.degree * c.degree).sum();
        let degree_sum_ok = degree_sum == self.group.order();

        Ok(OrthogonalityReport {
            rows_ok,
            columns_ok,
            degree_sum_ok,
        })
    }

    /// Self-contained dense export; round-trips through
    /// [`ExportedTable::verify_orthogonality`] without the group.
    pub fn export(&self) -> Result<ExportedTable, CharError> {
        let rows = self.dense_values()?;
        Ok(ExportedTable {
            n: self.group.n(),
            group_order: self.group.order(),
            class_count: self.class_count(),
            class_sizes: self.group.classes().iter().map(|c| c.size).collect(),
            characters: self
                .characters
                .iter()
                .zip(rows)
                .map(|(ch, row)| ExportedCharacter {
                    id: ch.id,
                    degree: ch.degree,
                    kind: ch.kind,
                    values: row.into_iter().map(|v| [v.re, v.im]).collect(),
                })
                .collect(),
        })
    }
}

/// Materialized character table as written to and read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedTable {
    pub n: u32,
    pub group_order: u64,
    pub class_count: usize,
    pub class_sizes: Vec<u64>,
    pub characters: Vec<ExportedCharacter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedCharacter {
    pub id: u32,
    pub degree: u64,
    pub kind: CharKind,
    pub values: Vec<[i64; 2]>,
}

impl ExportedTable {
    pub fn validate(&self) -> Result<(), CharError> {
        let fail = |reason: String| Err(CharError::MalformedImport { reason });
        if self.class_sizes.len() != self.class_count {
            return fail("class size list length mismatch".into());
        }
        if self.characters.len() != self.class_count {
            return fail(format!(
                "{} characters for {} classes",
                self.characters.len(),
                self.class_count
            ));
        }
        if self.class_sizes.iter().sum::<u64>() != self.group_order {
            return fail("class sizes do not sum to the group order".into());
        }
        for ch in &self.characters {
            if ch.values.len() != self.class_count {
                return fail(format!("character {} has {} values", ch.id, ch.values.len()));
            }
        }
        Ok(())
    }

    /// Same exact checks as on a live table, driven from the stored values.
    pub fn verify_orthogonality(&self) -> Result<OrthogonalityReport, CharError> {
        self.validate()?;
        let k = self.class_count;
        let order = self.group_order as i64;
        let value = |r: usize, j: usize| {
            let [re, im] = self.characters[r].values[j];
            GaussianInt::new(re, im)
        };

        let rows_ok = (0..k).into_par_iter().all(|r| {
            (r..k).all(|s| {
                let mut acc = GI_ZERO;
                for j in 0..k {
                    acc += value(r, j) * value(s, j).conj() * self.class_sizes[j] as i64;
                }
                acc == GaussianInt::real(if r == s { order } else { 0 })
            })
        });
        let columns_ok = (0..k).into_par_iter().all(|i| {
            (i..k).all(|j| {
                let mut acc = GI_ZERO;
                for r in 0..k {
                    acc += value(r, i) * value(r, j).conj();
                }
                acc == GaussianInt::real(if i == j { order / self.class_sizes[i] as i64 } else { 0 })
            })
        });
        let degree_sum_ok = self
            .characters
            .iter()
            .map(|c| c.degree * c.degree)
            .sum::<u64>()
            == self.group_order;

        Ok(OrthogonalityReport {
            rows_ok,
            columns_ok,
            degree_sum_ok,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::FieldCtx;
    use crate::group::Policy;
    use std::collections::BTreeSet;

    fn group(n: u32) -> SuzukiGroup {
        let e = if n == 1 { 0 } else { 1 };
        SuzukiGroup::new(FieldCtx::new(n, e, None).unwrap())
    }

    #[test]
    fn z4_table_matches_the_classical_one() {
        let g = group(1);
        let t = CharacterTable::new(&g, None);
        // Classes in rep order: (0,0), (0,1), (1,0), (1,1).
        let expect = [
            [(1, 0), (1, 0), (1, 0), (1, 0)],
            [(1, 0), (1, 0), (-1, 0), (-1, 0)],
            [(1, 0), (-1, 0), (0, 1), (0, -1)],
            [(1, 0), (-1, 0), (0, -1), (0, 1)],
        ];
        for (r, row) in expect.iter().enumerate() {
            for (j, &(re, im)) in row.iter().enumerate() {
                assert_eq!(
                    t.value(r as u32, j as u32),
                    GaussianInt::new(re, im),
                    "entry ({r}, {j})"
                );
            }
        }
    }

    #[test]
    fn counts_and_degree_sums() {
        for (n, k, order) in [(1, 4, 4), (3, 22, 64), (5, 94, 1024), (7, 382, 16384)] {
            let g = group(n);
            let t = CharacterTable::new(&g, None);
            assert_eq!(t.characters().len(), k);
            assert_eq!(t.class_count(), k);
            let degree_sum: u64 = t.characters().iter().map(|c| c.degree * c.degree).sum();
            assert_eq!(degree_sum, order);
            let linear = t
                .characters()
                .iter()
                .filter(|c| matches!(c.kind, CharKind::Linear { .. }))
                .count();
            assert_eq!(linear as u64, 1 << n);
        }
    }

    #[test]
    fn linear_characters_are_signs_trivial_on_the_center() {
        let g = group(3);
        let t = CharacterTable::new(&g, None);
        for ch in t.characters() {
            let CharKind::Linear { c } = ch.kind else { continue };
            assert_eq!(ch.degree, 1);
            for j in 0..t.class_count() as u32 {
                let v = t.value(ch.id, j);
                assert!(v == GaussianInt::real(1) || v == GaussianInt::real(-1));
                if g.class(j).is_central {
                    assert_eq!(v, GaussianInt::real(1));
                }
                if c.is_zero() {
                    assert_eq!(v, GaussianInt::real(1));
                }
            }
        }
    }

    #[test]
    fn nonlinear_support_is_center_plus_anchor_pair() {
        for n in [3, 5] {
            let g = group(n);
            let t = CharacterTable::new(&g, None);
            for ch in t.characters() {
                let CharKind::Nonlinear { coset_rep_class_id, sign } = ch.kind else {
                    continue;
                };
                assert_eq!(ch.degree, 1 << g.field().m());
                let inverse = g.class(coset_rep_class_id).inverse_class_id;
                let d = ch.degree as i64;
                for j in 0..t.class_count() as u32 {
                    let v = t.value(ch.id, j);
                    if j == coset_rep_class_id {
                        assert_eq!(v, GaussianInt::imag(sign.unit() * d));
                    } else if j == inverse {
                        assert_eq!(v, GaussianInt::imag(-sign.unit() * d));
                    } else if g.class(j).is_central {
                        assert!(v == GaussianInt::real(d) || v == GaussianInt::real(-d));
                    } else {
                        assert!(v.is_zero());
                    }
                }
                // Central values split evenly between +2^m and −2^m.
                let plus = (0..(1u64 << n))
                    .filter(|&b| t.value(ch.id, b as u32) == GaussianInt::real(d))
                    .count() as u64;
                assert_eq!(plus, 1 << (n - 1));
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        for n in [1, 3, 5] {
            let g = group(n);
            let t = CharacterTable::new(&g, None);
            let report = t.verify_orthogonality().unwrap();
            assert!(report.all_ok(), "n={n}: {report:?}");
        }
    }

    #[test]
    fn characters_are_pairwise_distinct() {
        let g = group(3);
        let t = CharacterTable::new(&g, None);
        let rows: BTreeSet<Vec<(i64, i64)>> = (0..t.class_count() as u32)
            .map(|r| t.values_of(r).iter().map(|v| (v.re, v.im)).collect())
            .collect();
        assert_eq!(rows.len(), t.class_count());
    }

    #[test]
    fn regular_character_vanishes_off_the_identity() {
        let g = group(5);
        let t = CharacterTable::new(&g, None);
        for j in 1..t.class_count() as u32 {
            let mut acc = GI_ZERO;
            for ch in t.characters() {
                acc += t.value(ch.id, j) * ch.degree as i64;
            }
            assert!(acc.is_zero(), "class {j}");
        }
    }

    #[test]
    fn anchoring_follows_the_connection_set() {
        let g = group(5);
        // A seed whose coin flips differ from lex somewhere.
        let conn = g.build_connection_set(Policy::Seeded(99)).unwrap();
        let lex = g.build_connection_set(Policy::Lex).unwrap();
        assert_ne!(conn.class_ids, lex.class_ids);

        let t = CharacterTable::new(&g, Some(&conn));
        let mut anchors_seen = BTreeSet::new();
        for ch in t.characters() {
            if let CharKind::Nonlinear { coset_rep_class_id, sign } = ch.kind {
                assert!(conn.contains_class(coset_rep_class_id));
                if sign == Sign::Plus {
                    anchors_seen.insert(coset_rep_class_id);
                }
            }
        }
        assert_eq!(anchors_seen.len() as u64, g.field().field_size() - 1);
        assert!(t.verify_orthogonality().unwrap().all_ok());
    }

    #[test]
    fn export_import_roundtrip() {
        let g = group(3);
        let t = CharacterTable::new(&g, None);
        let exported = t.export().unwrap();
        let json = serde_json::to_string(&exported).unwrap();
        let imported: ExportedTable = serde_json::from_str(&json).unwrap();
        assert_eq!(imported, exported);
        assert!(imported.verify_orthogonality().unwrap().all_ok());
        for ch in &imported.characters {
            let live = t.values_of(ch.id);
            for (j, v) in ch.values.iter().enumerate() {
                assert_eq!(GaussianInt::new(v[0], v[1]), live[j]);
            }
        }
    }

    #[test]
    fn malformed_import_is_rejected() {
        let g = group(1);
        let t = CharacterTable::new(&g, None);
        let mut exported = t.export().unwrap();
        exported.characters[2].values.pop();
        assert!(matches!(
            exported.verify_orthogonality(),
            Err(CharError::MalformedImport { .. })
        ));
    }

    #[test]
    fn dense_table_is_gated() {
        let g = group(11);
        let t = CharacterTable::new(&g, None);
        assert!(matches!(t.export(), Err(CharError::DenseTableTooLarge)));
        // Per-value queries still work at that size.
        assert_eq!(t.value(0, 0), GaussianInt::real(1));
    }
}
