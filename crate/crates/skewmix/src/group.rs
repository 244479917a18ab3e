//! The Suzuki 2-group A(n, θ) and its conjugacy structure.
//!
//! Elements are pairs (a, b) over GF(2^n) with product
//! (a, b)(c, d) = (a + c, b + d + a·c^θ). The center is {(0, b)}, every
//! noncentral element has order 4, and the noncentral conjugacy classes come
//! in inverse pairs indexed by a ≠ 0: the two cosets of the commutator
//! hyperplane M_a = {a·t^θ + a^θ·t}. A connection set picks one class from
//! each pair.

use crate::gf2n::{FieldCtx, FieldElement, FieldError};
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("hyperplane defined only for noncentral elements")]
    CentralHyperplane,
    #[error("{what} limited to n ≤ {max}")]
    ScaleLimit { what: &'static str, max: u32 },
    #[error("connection set invalid: {reason}")]
    ConnectionSetInvalid { reason: String },
}

/// A group element (a, b). Ordering is lexicographic on the bit patterns,
/// which matches the element index (a << n) | b used by the walk module.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct GroupElement {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        a: FieldElement::ZERO,
        b: FieldElement::ZERO,
    };

    pub fn new(a: FieldElement, b: FieldElement) -> GroupElement {
        GroupElement { a, b }
    }

    pub fn is_identity(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_central(self) -> bool {
        self.a.is_zero()
    }
}

/// An F₂-subspace of GF(2^n) of codimension 1, stored as a fully reduced
/// row-echelon basis. Coset representatives are numeric minima: clearing
/// every pivot bit leaves the unique member with no pivot set, and any other
/// member of the coset exceeds it at the top bit where they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    a: FieldElement,
    basis: Vec<u64>,
}

impl Hyperplane {
    /// Span of {a·t^θ + a^θ·t : t ∈ GF(2^n)} for a ≠ 0. The map is additive
    /// in t, so images of the unit vectors generate it; its kernel is {0, a},
    /// so the span has dimension exactly n − 1.
    fn commutator_span(field: &FieldCtx, a: FieldElement) -> Hyperplane {
        debug_assert!(!a.is_zero());
        let a_theta = field.frobenius(a);
        let mut basis: Vec<u64> = Vec::with_capacity(field.n() as usize);
        for i in 0..field.n() {
            let t = field.element(1 << i).unwrap();
            let image = field.add(
                field.mul(a, field.frobenius(t)),
                field.mul(a_theta, t),
            );
            let mut row = image.bits();
            for &r in &basis {
                let pivot = 63 - r.leading_zeros();
                if (row >> pivot) & 1 == 1 {
                    row ^= r;
                }
            }
            if row != 0 {
                basis.push(row);
                basis.sort_unstable_by(|x, y| y.cmp(x));
                // Re-reduce so no row contains another row's pivot.
                let snapshot = basis.clone();
                for r in basis.iter_mut() {
                    for &other in &snapshot {
                        if other != *r {
                            let pivot = 63 - other.leading_zeros();
                            if *r > other && (*r >> pivot) & 1 == 1 {
                                *r ^= other;
                            }
                        }
                    }
                }
                basis.sort_unstable_by(|x, y| y.cmp(x));
            }
        }
        assert_eq!(basis.len() as u32, field.n() - 1, "commutator map must have rank n-1");
        Hyperplane { a, basis }
    }

    pub fn defining_a(&self) -> FieldElement {
        self.a
    }

    /// Dimension of the subspace, always n − 1.
    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn contains(&self, z: FieldElement) -> bool {
        self.reduce(z.bits()) == 0
    }

    fn reduce(&self, mut bits: u64) -> u64 {
        for &row in &self.basis {
            let pivot = 63 - row.leading_zeros();
            if (bits >> pivot) & 1 == 1 {
                bits ^= row;
            }
        }
        bits
    }

    /// Numeric minimum of z + span.
    pub fn coset_rep(&self, z: FieldElement) -> FieldElement {
        FieldElement::new_unchecked(self.reduce(z.bits()))
    }

    /// All 2^{n−1} members, sorted.
    pub fn elements(&self) -> Vec<FieldElement> {
        let mut out = vec![0u64];
        for &row in &self.basis {
            let mut doubled = Vec::with_capacity(out.len() * 2);
            for &v in &out {
                doubled.push(v);
                doubled.push(v ^ row);
            }
            out = doubled;
        }
        out.sort_unstable();
        out.into_iter().map(FieldElement::new_unchecked).collect()
    }
}

/// One conjugacy class. Central classes are singletons; noncentral classes
/// are cosets (a, b + M_a) of size 2^{n−1}. `rep` is the least element of
/// the class, and classes are numbered in rep order, so the 2^n central
/// classes get ids 0..2^n with id equal to the b bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass {
    pub id: u32,
    pub rep: GroupElement,
    pub size: u64,
    pub inverse_class_id: u32,
    pub is_central: bool,
}

/// Which class of each inverse pair goes into the connection set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Policy {
    /// The class with the lexicographically least representative, which is
    /// always the coset containing (a, 0).
    Lex,
    /// An independent coin flip per pair, drawn in ascending order of a from
    /// a seeded stream. Same seed, same set.
    Seeded(u64),
}

impl std::fmt::Display for Policy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Policy::Lex => write!(f, "lex"),
            Policy::Seeded(seed) => write!(f, "seeded:{seed}"),
        }
    }
}

/// A union of noncentral classes containing exactly one class from each
/// inverse pair. Closed under conjugation by construction, so the Cayley
/// graph it defines is normal; disjoint from its inverse set, so that graph
/// is an orientation of the complete multipartite complement of the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet {
    pub policy: Policy,
    /// Sorted ids of the chosen classes, one per nonzero a.
    pub class_ids: Vec<u32>,
    pub size: u64,
}

impl ConnectionSet {
    pub fn contains_class(&self, class_id: u32) -> bool {
        self.class_ids.binary_search(&class_id).is_ok()
    }

    pub fn contains(&self, group: &SuzukiGroup, g: GroupElement) -> bool {
        !g.is_central() && self.contains_class(group.class_id_of(g))
    }

    /// All members, sorted. Exhaustive; meant for the dense paths.
    pub fn elements(&self, group: &SuzukiGroup) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = self
            .class_ids
            .iter()
            .flat_map(|&id| group.class_elements(id))
            .collect();
        out.sort_unstable();
        out
    }
}

/// The group A(n, θ) over a fixed field context, with the full conjugacy
/// apparatus precomputed: one commutator hyperplane per nonzero a and the
/// sorted class list. Element sets are never materialized here; everything
/// answers queries from (a, b) directly.
#[derive(Debug, Clone)]
pub struct SuzukiGroup {
    field: FieldCtx,
    classes: Vec<ConjClass>,
    /// Indexed by a bits − 1.
    hyperplanes: Vec<Hyperplane>,
}

impl SuzukiGroup {
    pub fn new(field: FieldCtx) -> SuzukiGroup {
        let q = field.field_size();
        let hyperplanes: Vec<Hyperplane> = (1..q)
            .map(|bits| Hyperplane::commutator_span(&field, FieldElement::new_unchecked(bits)))
            .collect();

        let mut classes: Vec<ConjClass> = Vec::with_capacity((q + 2 * (q - 1)) as usize);
        for b in 0..q {
            classes.push(ConjClass {
                id: 0,
                rep: GroupElement::new(FieldElement::ZERO, FieldElement::new_unchecked(b)),
                size: 1,
                inverse_class_id: 0,
                is_central: true,
            });
        }
        for a_bits in 1..q {
            let a = FieldElement::new_unchecked(a_bits);
            let plane = &hyperplanes[(a_bits - 1) as usize];
            // The two cosets of M_a: the one through 0 and its complement.
            let other = (0..q)
                .map(FieldElement::new_unchecked)
                .find(|&b| !plane.contains(b))
                .expect("M_a is a proper subspace");
            for b_rep in [FieldElement::ZERO, plane.coset_rep(other)] {
                classes.push(ConjClass {
                    id: 0,
                    rep: GroupElement::new(a, b_rep),
                    size: q / 2,
                    inverse_class_id: 0,
                    is_central: false,
                });
            }
        }
        classes.sort_unstable_by_key(|c| c.rep);
        for (i, c) in classes.iter_mut().enumerate() {
            c.id = i as u32;
        }

        let mut group = SuzukiGroup {
            field,
            classes,
            hyperplanes,
        };
        for i in 0..group.classes.len() {
            let rep = group.classes[i].rep;
            let inv_id = group.class_id_of(group.g_inv(rep));
            group.classes[i].inverse_class_id = inv_id;
            if !group.classes[i].is_central {
                // No order-4 element is conjugate to its inverse: a^{1+θ}
                // never lands in M_a.
                assert_ne!(inv_id, i as u32);
            }
        }
        group
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    /// |G| = 2^{2n}.
    pub fn order(&self) -> u64 {
        1u64 << (2 * self.field.n())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    /// Canonical index of an element: (a << n) | b.
    pub fn idx(&self, g: GroupElement) -> u64 {
        (g.a.bits() << self.field.n()) | g.b.bits()
    }

    pub fn element_at(&self, idx: u64) -> GroupElement {
        debug_assert!(idx < self.order());
        let mask = self.field.field_size() - 1;
        GroupElement::new(
            FieldElement::new_unchecked(idx >> self.field.n()),
            FieldElement::new_unchecked(idx & mask),
        )
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// (a, b)(c, d) = (a + c, b + d + a·c^θ).
    pub fn g_mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let f = &self.field;
        GroupElement::new(
            f.add(x.a, y.a),
            f.add(f.add(x.b, y.b), f.mul(x.a, f.frobenius(y.a))),
        )
    }

    /// (a, b)^{-1} = (a, b + a^{1+θ}).
    pub fn g_inv(&self, x: GroupElement) -> GroupElement {
        GroupElement::new(x.a, self.field.add(x.b, self.field.one_plus_theta(x.a)))
    }

    /// g^{-1} x g for g = (a, ·), x = (c, d): (c, d + a·c^θ + a^θ·c).
    pub fn g_conj(&self, x: GroupElement, g: GroupElement) -> GroupElement {
        let f = &self.field;
        let shift = f.add(
            f.mul(g.a, f.frobenius(x.a)),
            f.mul(f.frobenius(g.a), x.a),
        );
        GroupElement::new(x.a, f.add(x.b, shift))
    }

    /// [x, y] = x^{-1} y^{-1} x y = (0, a_x·a_y^θ + a_x^θ·a_y).
    pub fn g_comm(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let f = &self.field;
        GroupElement::new(
            FieldElement::ZERO,
            f.add(
                f.mul(x.a, f.frobenius(y.a)),
                f.mul(f.frobenius(x.a), y.a),
            ),
        )
    }

    /// ξ^k for the order-(2^n − 1) automorphism ξ(a, b) = (λa, λ^{1+θ}b).
    pub fn xi_apply(&self, x: GroupElement, k: u64) -> GroupElement {
        let f = &self.field;
        let mu = f.pow(f.lambda(), k);
        GroupElement::new(f.mul(mu, x.a), f.mul(f.one_plus_theta(mu), x.b))
    }

    /// Commutator hyperplane M_x ⊆ Z(G) of a noncentral element.
    pub fn hyperplane(&self, x: GroupElement) -> Result<&Hyperplane, GroupError> {
        if x.is_central() {
            return Err(GroupError::CentralHyperplane);
        }
        Ok(&self.hyperplanes[(x.a.bits() - 1) as usize])
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class(&self, id: u32) -> &ConjClass {
        &self.classes[id as usize]
    }

    /// 2^n central singletons plus 2(2^n − 1) classes of size 2^{n−1}.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class id of an element, O(n) bit work plus a binary search.
    pub fn class_id_of(&self, g: GroupElement) -> u32 {
        if g.is_central() {
            // Central reps (0, b) sort first, in b order.
            return g.b.bits() as u32;
        }
        let plane = &self.hyperplanes[(g.a.bits() - 1) as usize];
        let rep = GroupElement::new(g.a, plane.coset_rep(g.b));
        self.classes
            .binary_search_by_key(&rep, |c| c.rep)
            .expect("every (a, b + M_a) coset is a class") as u32
    }

    /// Members of a class, sorted: the singleton {rep} or (a, rep_b + M_a).
    pub fn class_elements(&self, id: u32) -> Vec<GroupElement> {
        let c = &self.classes[id as usize];
        if c.is_central {
            return vec![c.rep];
        }
        let plane = &self.hyperplanes[(c.rep.a.bits() - 1) as usize];
        plane
            .elements()
            .into_iter()
            .map(|w| GroupElement::new(c.rep.a, self.field.add(c.rep.b, w)))
            .collect()
    }

    /// Picks one class of each inverse pair per the policy, then validates
    /// the result: correct size, disjoint from its inverse set, and together
    /// with it covering exactly the noncentral classes.
    pub fn build_connection_set(&self, policy: Policy) -> Result<ConnectionSet, GroupError> {
        let q = self.field.field_size();
        let mut chosen: Vec<u32> = Vec::with_capacity((q - 1) as usize);
        let mut rng = match policy {
            Policy::Lex => None,
            Policy::Seeded(seed) => Some(rand_chacha::ChaCha12Rng::seed_from_u64(seed)),
        };
        for a_bits in 1..q {
            let a = FieldElement::new_unchecked(a_bits);
            let lesser = self.class_id_of(GroupElement::new(a, FieldElement::ZERO));
            let pick = match rng.as_mut() {
                None => lesser,
                Some(r) => {
                    if r.next_u32() & 1 == 0 {
                        lesser
                    } else {
                        self.classes[lesser as usize].inverse_class_id
                    }
                }
            };
            chosen.push(pick);
        }
        chosen.sort_unstable();

        let conn = ConnectionSet {
            policy,
            class_ids: chosen,
            size: (q / 2) * (q - 1),
        };
        self.validate_connection_set(&conn)?;
        Ok(conn)
    }

    /// Checks that `conn` names one noncentral class per nonzero a, never a
    /// class together with its inverse, and carries the right size.
    pub fn validate_connection_set(&self, conn: &ConnectionSet) -> Result<(), GroupError> {
        let q = self.field.field_size();
        let fail = |reason: String| Err(GroupError::ConnectionSetInvalid { reason });
        if conn.class_ids.len() as u64 != q - 1 {
            return fail(format!(
                "expected {} classes, found {}",
                q - 1,
                conn.class_ids.len()
            ));
        }
        if conn.class_ids.windows(2).any(|w| w[0] >= w[1]) {
            return fail("class ids not strictly sorted".into());
        }
        let mut size = 0u64;
        let mut seen_a = vec![false; q as usize];
        for &id in &conn.class_ids {
            let c = match self.classes.get(id as usize) {
                Some(c) => c,
                None => return fail(format!("class id {id} out of range")),
            };
            if c.is_central {
                return fail(format!("class {id} is central"));
            }
            if conn.contains_class(c.inverse_class_id) {
                return fail(format!("classes {id} and {} are mutually inverse", c.inverse_class_id));
            }
            let a = c.rep.a.bits() as usize;
            if seen_a[a] {
                return fail(format!("two classes over a = 0x{a:x}"));
            }
            seen_a[a] = true;
            size += c.size;
        }
        if size != conn.size {
            return fail(format!("size {} does not match element count {size}", conn.size));
        }
        Ok(())
    }

    /// Exhaustive check that the ordered differences c·d^{-1}, c ≠ d ∈ C,
    /// cover every non-identity element uniformly. Returns the common
    /// multiplicity when they do (it is then forced to be
    /// |C|(|C|−1)/(|G|−1)), and None otherwise; in particular None for n = 1,
    /// where the single pairless element yields no differences at all.
    pub fn difference_multiset_check(
        &self,
        conn: &ConnectionSet,
    ) -> Result<Option<u64>, GroupError> {
        if self.field.n() > 5 {
            return Err(GroupError::ScaleLimit {
                what: "exhaustive difference check",
                max: 5,
            });
        }
        let members = conn.elements(self);
        let inverses: Vec<GroupElement> = members.iter().map(|&d| self.g_inv(d)).collect();
        let mut counts = vec![0u64; self.order() as usize];
        for &c in &members {
            for &d_inv in &inverses {
                let diff = self.g_mul(c, d_inv);
                if !diff.is_identity() {
                    counts[self.idx(diff) as usize] += 1;
                }
            }
        }
        let mult = counts[1];
        if mult >= 1 && counts[1..].iter().all(|&k| k == mult) {
            Ok(Some(mult))
        } else {
            Ok(None)
        }
    }
}
