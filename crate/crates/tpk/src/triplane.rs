use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::braid::{plat_matching, BraidWord, Matching};
use crate::linkdiag::{
    certify_unlink_with_budget, plat_union, LinkDiagram, UnlinkVerdict, DEFAULT_MOVE_BUDGET,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriPlaneError {
    #[error("tangle word has {word_strands} strands, expected {expected} for {bridges} bridges")]
    WrongStrandCount { bridges: usize, word_strands: usize, expected: usize },
    #[error("bridge numbers differ: {0}, {1}, {2}")]
    BridgeMismatch(usize, usize, usize),
}

/// A b-strand trivial tangle as a plat: a braid word on 2b strands over the
/// base caps (1 2)(3 4)…(2b−1 2b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleDiagram {
    bridges: usize,
    word: BraidWord,
}

impl TangleDiagram {
    pub fn new(bridges: usize, word: BraidWord) -> Result<Self, TriPlaneError> {
        if word.strands() != 2 * bridges {
            return Err(TriPlaneError::WrongStrandCount {
                bridges,
                word_strands: word.strands(),
                expected: 2 * bridges,
            });
        }
        Ok(TangleDiagram { bridges, word })
    }

    pub fn bridges(&self) -> usize {
        self.bridges
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn matching(&self) -> Matching {
        plat_matching(&self.word).expect("even strand count by construction")
    }
}

/// Triple (P12, P23, P31) of trivial tangle diagrams sharing the bridge number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPlaneDiagram {
    p12: TangleDiagram,
    p23: TangleDiagram,
    p31: TangleDiagram,
}

impl TriPlaneDiagram {
    pub fn new(
        p12: TangleDiagram,
        p23: TangleDiagram,
        p31: TangleDiagram,
    ) -> Result<Self, TriPlaneError> {
        if p12.bridges() != p23.bridges() || p23.bridges() != p31.bridges() {
            return Err(TriPlaneError::BridgeMismatch(
                p12.bridges(),
                p23.bridges(),
                p31.bridges(),
            ));
        }
        Ok(TriPlaneDiagram { p12, p23, p31 })
    }

    pub fn from_words(
        bridges: usize,
        w12: Vec<i32>,
        w23: Vec<i32>,
        w31: Vec<i32>,
    ) -> Result<Self, String> {
        let mk = |ls: Vec<i32>| -> Result<TangleDiagram, String> {
            let w = BraidWord::new(2 * bridges, ls).map_err(|e| e.to_string())?;
            TangleDiagram::new(bridges, w).map_err(|e| e.to_string())
        };
        TriPlaneDiagram::new(mk(w12)?, mk(w23)?, mk(w31)?).map_err(|e| e.to_string())
    }

    pub fn bridges(&self) -> usize {
        self.p12.bridges()
    }

    pub fn p12(&self) -> &TangleDiagram {
        &self.p12
    }

    pub fn p23(&self) -> &TangleDiagram {
        &self.p23
    }

    pub fn p31(&self) -> &TangleDiagram {
        &self.p31
    }
}

/// The three sector links: L1 = P12 ∪ mirror(P31), L2 = P23 ∪ mirror(P12),
/// L3 = P31 ∪ mirror(P23).
pub fn sector_unions(t: &TriPlaneDiagram) -> [LinkDiagram; 3] {
    let l1 = plat_union(t.p12().word(), t.p31().word()).expect("equal strand counts");
    let l2 = plat_union(t.p23().word(), t.p12().word()).expect("equal strand counts");
    let l3 = plat_union(t.p31().word(), t.p23().word()).expect("equal strand counts");
    [l1, l2, l3]
}

/// c_i = joint-orbit count of the matchings of the two tangles bounding sector i.
pub fn patch_counts(t: &TriPlaneDiagram) -> (usize, usize, usize) {
    let m12 = t.p12().matching();
    let m23 = t.p23().matching();
    let m31 = t.p31().matching();
    (m12.joint_orbits(&m31), m23.joint_orbits(&m12), m31.joint_orbits(&m23))
}

/// χ(K) = c1 + c2 + c3 − b.
pub fn euler_characteristic(t: &TriPlaneDiagram) -> i64 {
    let (c1, c2, c3) = patch_counts(t);
    (c1 + c2 + c3) as i64 - t.bridges() as i64
}

/// Trisection parameters of the double cover of S⁴ branched over the surface.
pub fn branched_cover_params(t: &TriPlaneDiagram) -> (usize, (usize, usize, usize)) {
    let (c1, c2, c3) = patch_counts(t);
    (t.bridges() - 1, (c1 - 1, c2 - 1, c3 - 1))
}

/// Upper bound min{c_i} for the meridional rank of π1(S⁴∖K).
pub fn meridional_rank_bound(t: &TriPlaneDiagram) -> usize {
    let (c1, c2, c3) = patch_counts(t);
    c1.min(c2).min(c3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    Valid,
    ProbablyValid,
    Invalid,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub verdicts: [UnlinkVerdict; 3],
    pub patch_counts: (usize, usize, usize),
    pub overall: Overall,
}

pub fn validate(t: &TriPlaneDiagram) -> ValidationReport {
    validate_with_budget(t, DEFAULT_MOVE_BUDGET)
}

pub fn validate_with_budget(t: &TriPlaneDiagram, budget: usize) -> ValidationReport {
    let (c1, c2, c3) = patch_counts(t);
    let b = t.bridges();
    assert!(c1 <= b && c2 <= b && c3 <= b, "orbit counts bounded by bridge number");
    let unions = sector_unions(t);
    let expected = [c1, c2, c3];
    let verdicts: Vec<UnlinkVerdict> = unions
        .iter()
        .zip(expected)
        .map(|(d, c)| certify_unlink_with_budget(d, Some(c), budget))
        .collect();
    let overall = if verdicts.iter().any(|v| v.is_not_unlink()) {
        Overall::Invalid
    } else if verdicts.iter().all(|v| v.is_certified()) {
        Overall::Valid
    } else {
        Overall::ProbablyValid
    };
    ValidationReport {
        verdicts: [verdicts[0].clone(), verdicts[1].clone(), verdicts[2].clone()],
        patch_counts: (c1, c2, c3),
        overall,
    }
}

/// Free reduction plus absorption of a leading odd letter (a kink over a base
/// cap) to fixpoint.
pub fn reduce_plat_word(w: &BraidWord) -> BraidWord {
    let mut cur = w.free_reduce();
    loop {
        let letters = cur.letters();
        if let Some(&first) = letters.first() {
            if first.unsigned_abs() % 2 == 1 {
                let rest = letters[1..].to_vec();
                cur = BraidWord::new(cur.strands(), rest).unwrap().free_reduce();
                continue;
            }
        }
        return cur;
    }
}

/// Shortest all-positive word whose plat matching is `m`, lexicographically
/// least among those; found by breadth-first search over matchings (appending
/// letter k conjugates the matching by the transposition (k k+1)).
pub fn canonical_lift(m: &Matching) -> BraidWord {
    let n = m.points();
    let base = Matching::base(n);
    let mut prev: HashMap<Matching, (Matching, i32)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(base.clone());
    prev.insert(base.clone(), (base.clone(), 0));
    while let Some(cur) = queue.pop_front() {
        if &cur == m {
            break;
        }
        for k in 1..n {
            let next = conjugate_by_transposition(&cur, k);
            if !prev.contains_key(&next) {
                prev.insert(next.clone(), (cur.clone(), k as i32));
                queue.push_back(next);
            }
        }
    }
    let mut letters = Vec::new();
    let mut cur = m.clone();
    while cur != base {
        let (p, k) = prev[&cur].clone();
        letters.push(k);
        cur = p;
    }
    letters.reverse();
    BraidWord::new(n, letters).unwrap()
}

fn conjugate_by_transposition(m: &Matching, k: usize) -> Matching {
    let n = m.points();
    let swap = |x: usize| {
        if x == k {
            k + 1
        } else if x == k + 1 {
            k
        } else {
            x
        }
    };
    let partner = (1..=n).map(|x| swap(m.pair(swap(x)))).collect();
    Matching::from_partners(partner)
}

/// True iff every tangle word reduces to the canonical crossingless lift of a
/// planar matching. Sound but not complete: words equivalent to a crossingless
/// picture by moves beyond free reduction and cap absorption are not detected.
pub fn is_crossingless(t: &TriPlaneDiagram) -> bool {
    for tangle in [t.p12(), t.p23(), t.p31()] {
        let m = tangle.matching();
        if !m.is_planar() {
            return false;
        }
        let reduced = reduce_plat_word(tangle.word());
        if reduced.letters() != canonical_lift(&m).letters() {
            return false;
        }
    }
    true
}

/// Parses the `.tpd` line format; `#` starts a comment line anywhere.
pub fn parse_tpd(text: &str) -> Result<TriPlaneDiagram, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or("empty file")?;
    let b: usize = header
        .strip_prefix("triplane b=")
        .ok_or(format!("line {ln}: expected `triplane b=<int>`"))?
        .trim()
        .parse()
        .map_err(|_| format!("line {ln}: bad bridge number"))?;
    if b == 0 {
        return Err(format!("line {ln}: bridge number must be positive"));
    }
    let mut words = Vec::new();
    for tag in ["P12:", "P23:", "P31:"] {
        let (ln, line) = lines.next().ok_or(format!("missing `{tag}` line"))?;
        let body = line
            .strip_prefix(tag)
            .ok_or(format!("line {ln}: expected `{tag} <word>`"))?;
        let w = BraidWord::parse(2 * b, body).map_err(|e| format!("line {ln}: {e}"))?;
        words.push(w);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(format!("line {ln}: unexpected trailing content"));
    }
    let mk = |w: BraidWord| TangleDiagram::new(b, w).map_err(|e| e.to_string());
    TriPlaneDiagram::new(
        mk(words[0].clone())?,
        mk(words[1].clone())?,
        mk(words[2].clone())?,
    )
    .map_err(|e| e.to_string())
}

/// Canonical `.tpd` form; parse ∘ emit is the identity.
pub fn emit_tpd(t: &TriPlaneDiagram) -> String {
    format!(
        "triplane b={}\nP12: {}\nP23: {}\nP31: {}\n",
        t.bridges(),
        t.p12().word(),
        t.p23().word(),
        t.p31().word()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tpd(b: usize, w12: &[i32], w23: &[i32], w31: &[i32]) -> TriPlaneDiagram {
        TriPlaneDiagram::from_words(b, w12.to_vec(), w23.to_vec(), w31.to_vec()).unwrap()
    }

    #[test]
    fn trivial_diagram() {
        let t = tpd(1, &[], &[], &[]);
        assert_eq!(patch_counts(&t), (1, 1, 1));
        assert_eq!(euler_characteristic(&t), 2);
        assert_eq!(branched_cover_params(&t), (0, (0, 0, 0)));
        assert_eq!(meridional_rank_bound(&t), 1);
        let r = validate(&t);
        assert_eq!(r.overall, Overall::Valid);
    }

    #[test]
    fn patch_counts_slope_example() {
        let t = tpd(2, &[], &[], &[2]);
        assert_eq!(patch_counts(&t), (1, 2, 1));
        assert_eq!(euler_characteristic(&t), 2);
    }

    #[test]
    fn branched_cover_arithmetic() {
        // pure arithmetic in (b; c): exhaustive over b ≤ 6 via direct formula
        for b in 1..=6usize {
            let t = tpd(b, &[], &[], &[]);
            let (g, (k1, k2, k3)) = branched_cover_params(&t);
            let (c1, c2, c3) = patch_counts(&t);
            assert_eq!(g, b - 1);
            assert_eq!((k1, k2, k3), (c1 - 1, c2 - 1, c3 - 1));
        }
    }

    #[test]
    fn invalid_sector_detected() {
        // P12 = σ2³ against the empty P31 closes up to a trefoil in sector 1
        let t = tpd(2, &[2, 2, 2], &[], &[]);
        let r = validate(&t);
        assert_eq!(r.overall, Overall::Invalid);
        assert!(r.verdicts[0].is_not_unlink());
    }

    #[test]
    fn doubled_word_is_valid() {
        let t = tpd(2, &[2, 2, 2], &[2, 2, 2], &[2, 2, 2]);
        assert_eq!(validate(&t).overall, Overall::Valid);
        assert_eq!(patch_counts(&t), (2, 2, 2));
        assert_eq!(euler_characteristic(&t), 4);
    }

    #[test]
    fn reduce_plat_word_examples() {
        let w = BraidWord::new(4, vec![1, 2, -2, -1]).unwrap();
        assert!(reduce_plat_word(&w).is_empty());
        let w = BraidWord::new(4, vec![3, 1, 2]).unwrap();
        assert_eq!(reduce_plat_word(&w).letters(), &[2]);
        let w = BraidWord::new(4, vec![2, 1]).unwrap();
        assert_eq!(reduce_plat_word(&w).letters(), &[2, 1]);
    }

    #[test]
    fn canonical_lift_examples() {
        assert!(canonical_lift(&Matching::base(4)).is_empty());
        let m = Matching::from_partners(vec![3, 4, 1, 2]);
        assert_eq!(canonical_lift(&m).letters(), &[2]);
        let lifted = plat_matching(&canonical_lift(&m)).unwrap();
        assert_eq!(lifted, m);
    }

    #[test]
    fn crossingless_examples() {
        assert!(is_crossingless(&tpd(1, &[], &[], &[])));
        // [2,1] is the canonical lift of the nested matching (1 4)(2 3)
        assert!(is_crossingless(&tpd(2, &[], &[], &[2, 1])));
        // the matching of [2] interleaves, so its tangle is not crossingless
        assert!(!is_crossingless(&tpd(2, &[], &[], &[2])));
        assert!(!is_crossingless(&tpd(2, &[2, 2, 2], &[], &[])));
    }

    #[test]
    fn tpd_round_trip() {
        let t = tpd(2, &[2, 2, 2], &[], &[2]);
        let text = emit_tpd(&t);
        assert_eq!(parse_tpd(&text).unwrap(), t);
        assert_eq!(emit_tpd(&parse_tpd(&text).unwrap()), text);
    }

    #[test]
    fn tpd_parses_comments() {
        let text = "# example\ntriplane b=1\nP12:\n# interior\nP23:\nP31:\n";
        let t = parse_tpd(text).unwrap();
        assert_eq!(t.bridges(), 1);
    }

    #[test]
    fn tpd_rejects_bad_input() {
        assert!(parse_tpd("").is_err());
        assert!(parse_tpd("triplane b=2\nP12: 9\nP23:\nP31:\n").is_err());
        assert!(parse_tpd("triplane b=0\nP12:\nP23:\nP31:\n").is_err());
        assert!(parse_tpd("triplane b=1\nP12:\nP23:\n").is_err());
    }

    fn arb_letters(b: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
        let k = (2 * b - 1) as i32;
        prop::collection::vec((1..=k).prop_flat_map(|a| prop_oneof![Just(a), Just(-a)]), 0..max_len)
    }

    proptest! {
        #[test]
        fn patch_counts_bounded(w12 in arb_letters(3, 8), w23 in arb_letters(3, 8), w31 in arb_letters(3, 8)) {
            let t = tpd(3, &w12, &w23, &w31);
            let (c1, c2, c3) = patch_counts(&t);
            prop_assert!(c1 >= 1 && c1 <= 3);
            prop_assert!(c2 >= 1 && c2 <= 3);
            prop_assert!(c3 >= 1 && c3 <= 3);
        }

        #[test]
        fn mutual_letter_append_preserves_patch_counts(
            w12 in arb_letters(3, 6), w23 in arb_letters(3, 6), w31 in arb_letters(3, 6),
            k in 1..=5i32,
        ) {
            let t = tpd(3, &w12, &w23, &w31);
            let push = |mut v: Vec<i32>| { v.push(k); v };
            let t2 = tpd(3, &push(w12.clone()), &push(w23.clone()), &push(w31.clone()));
            prop_assert_eq!(patch_counts(&t), patch_counts(&t2));
        }

        #[test]
        fn canonical_lift_realizes_matching(w in arb_letters(3, 8)) {
            let word = BraidWord::new(6, w).unwrap();
            let m = plat_matching(&word).unwrap();
            if m.is_planar() {
                prop_assert_eq!(plat_matching(&canonical_lift(&m)).unwrap(), m);
            }
        }
    }
}
