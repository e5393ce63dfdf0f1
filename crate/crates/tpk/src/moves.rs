use thiserror::Error;

use crate::banded::{Band, BandedError, BandedUnlink};
use crate::braid::{BraidWord, Matching};
use crate::triplane::{
    canonical_lift, patch_counts, reduce_plat_word, TangleDiagram, TriPlaneDiagram,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("generator index {0} out of range for {1} strands")]
    BadIndex(i32, usize),
    #[error("sector must be 1, 2, or 3, got {0}")]
    BadSector(usize),
    #[error("rewrite not applicable at the stated position")]
    NotApplicable,
    #[error("invalid stabilization site")]
    BadSite,
    #[error("witness does not match the diagram")]
    BadWitness,
    #[error("move side condition violated")]
    MoveNotApplicable,
}

fn rebuild(t: &TriPlaneDiagram, words: [BraidWord; 3]) -> TriPlaneDiagram {
    let b = words[0].strands() / 2;
    let _ = t;
    let [w12, w23, w31] = words;
    TriPlaneDiagram::new(
        TangleDiagram::new(b, w12).expect("strand count fixed by construction"),
        TangleDiagram::new(b, w23).expect("strand count fixed by construction"),
        TangleDiagram::new(b, w31).expect("strand count fixed by construction"),
    )
    .expect("equal bridge numbers by construction")
}

fn words(t: &TriPlaneDiagram) -> [BraidWord; 3] {
    [
        t.p12().word().clone(),
        t.p23().word().clone(),
        t.p31().word().clone(),
    ]
}

/// Sector i is bounded by the tangles at `sector_pair(i)` in the word array
/// [P12, P23, P31]; the remaining tangle is `opposite(i)`.
fn sector_pair(sector: usize) -> Option<(usize, usize)> {
    match sector {
        1 => Some((0, 2)),
        2 => Some((1, 0)),
        3 => Some((2, 1)),
        _ => None,
    }
}

fn opposite(sector: usize) -> usize {
    3 - sector_pair(sector).map(|(a, b)| a + b).unwrap_or(0)
}

/// The same elementary braiding appended to all three tangles; the appended
/// letters cancel in every plat union.
pub fn mutual_transposition(t: &TriPlaneDiagram, k: i32) -> Result<TriPlaneDiagram, MoveError> {
    let n = 2 * t.bridges();
    if k == 0 || k.unsigned_abs() as usize >= n {
        return Err(MoveError::BadIndex(k, n));
    }
    let new = words(t).map(|w| {
        let mut ls = w.letters().to_vec();
        ls.push(k);
        BraidWord::new(n, ls).expect("letter range checked above")
    });
    Ok(rebuild(t, new))
}

/// One word-level Reidemeister step inside a single tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    /// Cancel the inverse pair at positions pos, pos+1.
    FreeReduce(usize),
    /// Replace [k, l, k] by [l, k, l] at pos, where |‖k|−|l‖ = 1 and the signs agree.
    YangBaxter(usize),
    /// Swap the distant letters at positions pos, pos+1.
    Commute(usize),
    /// Drop a leading odd letter adjacent to its bottom cap.
    CapAbsorb,
}

pub fn interior_rewrite(
    t: &TriPlaneDiagram,
    sector: usize,
    rewrite: Rewrite,
) -> Result<TriPlaneDiagram, MoveError> {
    let idx = match sector {
        1 => 0,
        2 => 1,
        3 => 2,
        _ => return Err(MoveError::BadSector(sector)),
    };
    let mut ws = words(t);
    let n = ws[idx].strands();
    let mut ls = ws[idx].letters().to_vec();
    match rewrite {
        Rewrite::FreeReduce(pos) => {
            if pos + 1 >= ls.len() || ls[pos] != -ls[pos + 1] {
                return Err(MoveError::NotApplicable);
            }
            ls.drain(pos..pos + 2);
        }
        Rewrite::YangBaxter(pos) => {
            if pos + 2 >= ls.len() {
                return Err(MoveError::NotApplicable);
            }
            let (k, l, k2) = (ls[pos], ls[pos + 1], ls[pos + 2]);
            if k != k2 || (k - l).abs() != 1 || k.signum() != l.signum() {
                return Err(MoveError::NotApplicable);
            }
            ls[pos] = l;
            ls[pos + 1] = k;
            ls[pos + 2] = l;
        }
        Rewrite::Commute(pos) => {
            if pos + 1 >= ls.len() || (ls[pos].abs() - ls[pos + 1].abs()).abs() < 2 {
                return Err(MoveError::NotApplicable);
            }
            ls.swap(pos, pos + 1);
        }
        Rewrite::CapAbsorb => {
            match ls.first() {
                Some(&k) if k.unsigned_abs() % 2 == 1 => {
                    ls.remove(0);
                }
                _ => return Err(MoveError::NotApplicable),
            };
        }
    }
    ws[idx] = BraidWord::new(n, ls).expect("letters unchanged or removed");
    Ok(rebuild(t, ws))
}

/// Stabilization site: the a-arc end x in the sector's first tangle and the
/// b-arc end y in its second tangle, both on one closed component of their
/// joint matching. The split encloses the chain from x to y; its length sets
/// the stabilization order n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabSite {
    pub x: usize,
    pub y: usize,
}

/// Transport word realizing the transposition of punctures x and m (x < m) as
/// a palindrome of adjacent transpositions.
fn palindrome(x: usize, m: usize) -> Vec<i32> {
    let mut out: Vec<i32> = (x as i32..m as i32).rev().collect();
    out.extend(x as i32 + 1..m as i32);
    out
}

/// Default elementary site: splits a bigon off the component of puncture 1.
pub fn default_site(t: &TriPlaneDiagram, sector: usize) -> Result<StabSite, MoveError> {
    let (ai, _) = sector_pair(sector).ok_or(MoveError::BadSector(sector))?;
    let ws = words(t);
    let ma = crate::braid::plat_matching(&ws[ai]).expect("even strands");
    Ok(StabSite { x: 1, y: ma.pair(1) })
}

/// Splits a new bridge off the sector's disk system: the new cap joins the two
/// tangles of the sector through transport fingers; parameters become
/// (b+1; c_i+1 at the stabilized sector).
pub fn stabilize(
    t: &TriPlaneDiagram,
    sector: usize,
    site: StabSite,
) -> Result<TriPlaneDiagram, MoveError> {
    let (ai, bi) = sector_pair(sector).ok_or(MoveError::BadSector(sector))?;
    let b = t.bridges();
    let n = 2 * b;
    let ws = words(t);
    if site.x < 1 || site.x > n || site.y < 1 || site.y > n {
        return Err(MoveError::BadSite);
    }
    let ma = crate::braid::plat_matching(&ws[ai]).expect("even strands");
    let mb = crate::braid::plat_matching(&ws[bi]).expect("even strands");
    // x and y must lie on one closed component of the sector's joint matching
    let mut on_chain = false;
    let mut p = site.x;
    loop {
        let q = ma.pair(p);
        if p == site.y || q == site.y {
            on_chain = true;
        }
        p = mb.pair(q);
        if p == site.x {
            break;
        }
    }
    if !on_chain {
        return Err(MoveError::BadSite);
    }
    let mut new = [0, 1, 2].map(|i| ws[i].letters().to_vec());
    new[ai].extend(palindrome(site.x, n + 1));
    new[bi].extend(palindrome(site.y, n + 2));
    let lifted = new.map(|ls| BraidWord::new(n + 2, ls).expect("letters within range"));
    Ok(rebuild(t, lifted))
}

/// Shadow-chain destabilization witness: the chain punctures in traversal
/// order around the simple closed curve, and the opposite tangle's arc c*
/// with its on-chain endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestabWitness {
    pub sector: usize,
    pub shadow_chain: Vec<usize>,
    pub final_arc: (usize, usize),
}

impl DestabWitness {
    pub fn order(&self) -> usize {
        self.shadow_chain.len() / 2
    }
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (p, q) = (a.0.min(a.1), a.0.max(a.1));
    let (r, s) = (b.0.min(b.1), b.0.max(b.1));
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

fn is_canonical(t: &TriPlaneDiagram) -> bool {
    [t.p12(), t.p23(), t.p31()].iter().all(|tg| {
        reduce_plat_word(tg.word()).letters() == canonical_lift(&tg.matching()).letters()
    })
}

/// Searches for destabilization witnesses among equatorial shadow chains.
/// Restricted and sound, not complete: only diagrams in canonical position are
/// inspected, and only chains whose shadow arcs embed along the equator
/// without mutual crossings are reported.
pub fn find_destabilizations(t: &TriPlaneDiagram, search_budget: usize) -> Vec<DestabWitness> {
    let mut out = Vec::new();
    if t.bridges() < 2 || !is_canonical(t) {
        return out;
    }
    let ms = [
        t.p12().matching(),
        t.p23().matching(),
        t.p31().matching(),
    ];
    for sector in 1..=3 {
        let (ai, bi) = sector_pair(sector).expect("sector in range");
        let (ma, mb, mc) = (&ms[ai], &ms[bi], &ms[opposite(sector) ]);
        let mut seen = vec![false; 2 * t.bridges() + 1];
        for start in 1..=2 * t.bridges() {
            if seen[start] {
                continue;
            }
            // walk the joint orbit a-arc first
            let mut chain = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                chain.push(p);
                let q = ma.pair(p);
                seen[q] = true;
                chain.push(q);
                p = mb.pair(q);
                if p == start {
                    break;
                }
            }
            if out.len() >= search_budget {
                return out;
            }
            // equatorial embedding: no two chain arcs of one tangle interleave
            let arcs_ok = |m: &Matching| {
                let arcs: Vec<(usize, usize)> =
                    chain.iter().map(|&p| (p, m.pair(p))).collect();
                arcs.iter().enumerate().all(|(i, &a)| {
                    arcs[i + 1..].iter().all(|&b| !interleaved(a, b))
                })
            };
            if !arcs_ok(ma) || !arcs_ok(mb) {
                continue;
            }
            for &z in &chain {
                let w = mc.pair(z);
                if !chain.contains(&w) {
                    out.push(DestabWitness {
                        sector,
                        shadow_chain: chain.clone(),
                        final_arc: (z, w),
                    });
                    break;
                }
            }
        }
    }
    out
}

fn remove_punctures(m: &Matching, kill: (usize, usize), join: bool) -> Matching {
    let n = m.points();
    let (z, w) = kill;
    let renum = |p: usize| p - [z, w].iter().filter(|&&k| k < p).count();
    let mut partner = vec![0usize; n - 2];
    for p in 1..=n {
        if p == z || p == w {
            continue;
        }
        let mut q = m.pair(p);
        if join && (q == z || q == w) {
            // the punctures vanish; the two arcs ending there fuse
            q = m.pair(if q == z { w } else { z });
        }
        partner[renum(p) - 1] = renum(q);
    }
    Matching::from_partners(partner)
}

/// Undoes a stabilization at the given witness. The surgery removes the
/// bridge carrying c*: word-level when c* is the rightmost cap, else by
/// canonical relift of the surgered matchings (canonical diagrams only).
pub fn destabilize(t: &TriPlaneDiagram, w: &DestabWitness) -> Result<TriPlaneDiagram, MoveError> {
    let b = t.bridges();
    let n = 2 * b;
    if b < 2 {
        return Err(MoveError::BadWitness);
    }
    let (ai, bi) = sector_pair(w.sector).ok_or(MoveError::BadSector(w.sector))?;
    let ci = opposite(w.sector);
    let ws = words(t);
    let ms = [0, 1, 2].map(|i| crate::braid::plat_matching(&ws[i]).expect("even strands"));
    let (z, zz) = w.final_arc;
    if ms[ci].pair(z) != zz || !w.shadow_chain.contains(&z) || w.shadow_chain.contains(&zz) {
        return Err(MoveError::BadWitness);
    }
    let (c1, c2, c3) = patch_counts(t);
    if (z.min(zz), z.max(zz)) == (n - 1, n) {
        // word-level: transport the chain ends home and truncate the last cap
        let x = ms[ai].pair(zz);
        let y = ms[bi].pair(z);
        let mut new = [0, 1, 2].map(|i| ws[i].letters().to_vec());
        let (lo_a, hi_a) = (x.min(z), x.max(z));
        let (lo_b, hi_b) = (y.min(zz), y.max(zz));
        new[ai].extend(palindrome(lo_a, hi_a).iter().rev().map(|&l| -l));
        new[bi].extend(palindrome(lo_b, hi_b).iter().rev().map(|&l| -l));
        let reduced = new.map(|ls| {
            reduce_plat_word(&BraidWord::new(n, ls).expect("letters within range"))
        });
        if reduced
            .iter()
            .any(|w| w.letters().iter().any(|&l| l.unsigned_abs() as usize >= n - 1))
        {
            return Err(MoveError::BadWitness);
        }
        let shrunk = reduced.map(|w| {
            BraidWord::new(n - 2, w.letters().to_vec()).expect("letters fit smaller strand count")
        });
        let out = rebuild(t, shrunk);
        check_destab_counts(&out, w.sector, (c1, c2, c3))?;
        return Ok(out);
    }
    if !is_canonical(t) {
        return Err(MoveError::BadWitness);
    }
    let kill = (z.min(zz), z.max(zz));
    let surgered = [
        remove_punctures(&ms[0], kill, 0 != ci),
        remove_punctures(&ms[1], kill, 1 != ci),
        remove_punctures(&ms[2], kill, 2 != ci),
    ];
    let lifted = surgered.map(|m| canonical_lift(&m));
    let out = rebuild(t, lifted);
    check_destab_counts(&out, w.sector, (c1, c2, c3))?;
    Ok(out)
}

fn check_destab_counts(
    out: &TriPlaneDiagram,
    sector: usize,
    before: (usize, usize, usize),
) -> Result<(), MoveError> {
    let after = patch_counts(out);
    let expect = |i: usize, c: usize| if i == sector { c - 1 } else { c };
    if after != (expect(1, before.0), expect(2, before.1), expect(3, before.2)) {
        return Err(MoveError::BadWitness);
    }
    Ok(())
}

/// Joins two diagrams along the last bridge of the first and the first bridge
/// of the second; parameters (b1+b2−1; c_i + c_i' − 1).
pub fn connected_sum(a: &TriPlaneDiagram, b: &TriPlaneDiagram) -> TriPlaneDiagram {
    let (b1, b2) = (a.bridges(), b.bridges());
    let n = 2 * (b1 + b2 - 1);
    let shift = 2 * b1 - 2;
    let join = |wa: &BraidWord, wb: &BraidWord| {
        let mut ls = wa.letters().to_vec();
        ls.extend(wb.letters().iter().map(|&l| l + l.signum() * shift as i32));
        BraidWord::new(n, ls).expect("shifted letters within range")
    };
    TriPlaneDiagram::new(
        TangleDiagram::new(b1 + b2 - 1, join(a.p12().word(), b.p12().word())).expect("strands"),
        TangleDiagram::new(b1 + b2 - 1, join(a.p23().word(), b.p23().word())).expect("strands"),
        TangleDiagram::new(b1 + b2 - 1, join(a.p31().word(), b.p31().word())).expect("strands"),
    )
    .expect("equal bridge numbers")
}

/// Cup move: a split unknotted circle joined to the last strand by a trivial
/// band. The resolved link and the presented surface are unchanged.
pub fn cup(bl: &BandedUnlink) -> Result<BandedUnlink, BandedError> {
    let n = 2 * bl.bridges();
    let grow = |w: &BraidWord| {
        BraidWord::new(n + 2, w.letters().to_vec()).expect("letters unchanged")
    };
    let mut bands = bl.bands().to_vec();
    bands.push(Band::flat(n, n + 1)?);
    BandedUnlink::new(bl.bridges() + 1, grow(bl.word12()), grow(bl.word31()), bands)
}

/// Cap move: adds a band whose sole resolution effect is to split off an
/// unknotted circle; the caller supplies the band, the side condition is
/// checked on the resolved diagram.
pub fn cap(bl: &BandedUnlink, band: Band) -> Result<BandedUnlink, MoveError> {
    let mut bands = bl.bands().to_vec();
    bands.push(band);
    let out = BandedUnlink::new(
        bl.bridges(),
        bl.word12().clone(),
        bl.word31().clone(),
        bands,
    )
    .map_err(|_| MoveError::MoveNotApplicable)?;
    let before = crate::linkdiag::component_count(&crate::banded::resolve(bl))
        .expect("resolved diagrams well formed");
    let after = crate::linkdiag::component_count(&crate::banded::resolve(&out))
        .map_err(|_| MoveError::MoveNotApplicable)?;
    if after != before + 1 {
        return Err(MoveError::MoveNotApplicable);
    }
    Ok(out)
}

/// Replaces band `i` and gates the rewrite on the full invariant suite:
/// resolution component count, unlink certification, abelianization, and
/// S3-hom count must all be unchanged.
fn gated_band_rewrite(
    bl: &BandedUnlink,
    i: usize,
    replacement: Band,
) -> Result<BandedUnlink, MoveError> {
    use crate::banded::{resolve, validate_banded};
    use crate::group::{abelianization, count_homs, presentation_from_banded};
    use crate::linkdiag::{certify_unlink, component_count};
    let mut bands = bl.bands().to_vec();
    bands[i] = replacement;
    let out = BandedUnlink::new(
        bl.bridges(),
        bl.word12().clone(),
        bl.word31().clone(),
        bands,
    )
    .map_err(|_| MoveError::MoveNotApplicable)?;
    let before = component_count(&resolve(bl)).expect("resolved diagrams well formed");
    let after =
        component_count(&resolve(&out)).map_err(|_| MoveError::MoveNotApplicable)?;
    if after != before
        || certify_unlink(&resolve(&out), Some(after)).is_not_unlink()
        || matches!(validate_banded(&out).overall, crate::triplane::Overall::Invalid)
    {
        return Err(MoveError::MoveNotApplicable);
    }
    let (pa, pb) = (
        presentation_from_banded(bl).map_err(|_| MoveError::MoveNotApplicable)?,
        presentation_from_banded(&out).map_err(|_| MoveError::MoveNotApplicable)?,
    );
    if abelianization(&pa) != abelianization(&pb)
        || count_homs(&pa, 3).ok() != count_homs(&pb, 3).ok()
    {
        return Err(MoveError::MoveNotApplicable);
    }
    Ok(out)
}

/// Band slide: one foot of band `b1` travels across band `b2`; the other foot,
/// certified by the invariant gate, stays put. `route` is the slid band.
pub fn band_slide(
    bl: &BandedUnlink,
    b1: usize,
    b2: usize,
    route: Band,
) -> Result<BandedUnlink, MoveError> {
    let nb = bl.bands().len();
    if b1 >= nb || b2 >= nb || b1 == b2 {
        return Err(MoveError::MoveNotApplicable);
    }
    let old = &bl.bands()[b1];
    let over = &bl.bands()[b2];
    let old_feet = [old.lo(), old.hi()];
    let new_feet = [route.lo(), route.hi()];
    let moved: Vec<(usize, usize)> = old_feet
        .iter()
        .zip(&new_feet)
        .filter(|(a, b)| a != b)
        .map(|(&a, &b)| (a, b))
        .collect();
    let fixed_ok = old_feet.iter().any(|f| new_feet.contains(f));
    // the moving foot starts and ends in the sliding range of b2
    let near = |p: usize| p + 1 >= over.lo() && p <= over.hi() + 1;
    match (moved.as_slice(), fixed_ok) {
        ([(a, b)], true) if near(*a) && near(*b) => gated_band_rewrite(bl, b1, route),
        _ => Err(MoveError::MoveNotApplicable),
    }
}

/// Band swim: band `b1` passes through band `b2`; feet and curls are fixed,
/// bypass sides change only over the span of `b2`.
pub fn band_swim(
    bl: &BandedUnlink,
    b1: usize,
    b2: usize,
    route: Band,
) -> Result<BandedUnlink, MoveError> {
    let nb = bl.bands().len();
    if b1 >= nb || b2 >= nb || b1 == b2 {
        return Err(MoveError::MoveNotApplicable);
    }
    let old = &bl.bands()[b1];
    let over = &bl.bands()[b2];
    if route.lo() != old.lo() || route.hi() != old.hi() || route.curls() != old.curls() {
        return Err(MoveError::MoveNotApplicable);
    }
    let changed = old
        .bypasses()
        .iter()
        .zip(route.bypasses())
        .any(|(x, y)| x != y && !(over.lo() <= x.0 && x.0 <= over.hi()));
    if changed || old.bypasses() == route.bypasses() {
        return Err(MoveError::MoveNotApplicable);
    }
    gated_band_rewrite(bl, b1, route)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triplane::{euler_characteristic, validate, Overall};

    fn tpd(b: usize, w12: Vec<i32>, w23: Vec<i32>, w31: Vec<i32>) -> TriPlaneDiagram {
        TriPlaneDiagram::from_words(b, w12, w23, w31).unwrap()
    }

    #[test]
    fn mutual_transposition_cancels_in_unions() {
        let t = tpd(1, vec![], vec![], vec![]);
        let t2 = mutual_transposition(&t, 1).unwrap();
        assert_eq!(t2.p12().word().letters(), &[1]);
        let t3 = mutual_transposition(&t2, -1).unwrap();
        for tg in [t3.p12(), t3.p23(), t3.p31()] {
            assert!(tg.word().free_reduce().is_empty());
        }
        assert_eq!(patch_counts(&t2), patch_counts(&t));
        assert!(mutual_transposition(&t, 2).is_err());
    }

    #[test]
    fn rewrites_preserve_matchings() {
        let t = tpd(2, vec![2, 1, -1], vec![1, 2, 1], vec![1, 2]);
        let r1 = interior_rewrite(&t, 1, Rewrite::FreeReduce(1)).unwrap();
        assert_eq!(r1.p12().word().letters(), &[2]);
        let r2 = interior_rewrite(&t, 2, Rewrite::YangBaxter(0)).unwrap();
        assert_eq!(r2.p23().word().letters(), &[2, 1, 2]);
        assert_eq!(r2.p23().matching(), t.p23().matching());
        let r3 = interior_rewrite(&t, 3, Rewrite::CapAbsorb).unwrap();
        assert_eq!(r3.p31().word().letters(), &[2]);
        assert_eq!(r3.p31().matching(), t.p31().matching());
        assert!(interior_rewrite(&t, 1, Rewrite::Commute(0)).is_err());
        assert!(interior_rewrite(&t, 2, Rewrite::FreeReduce(0)).is_err());
    }

    #[test]
    fn elementary_stabilization_parameters() {
        let t = tpd(1, vec![], vec![], vec![]);
        for sector in 1..=3 {
            let site = default_site(&t, sector).unwrap();
            let s = stabilize(&t, sector, site).unwrap();
            assert_eq!(s.bridges(), 2);
            let c = patch_counts(&s);
            let expect = match sector {
                1 => (2, 1, 1),
                2 => (1, 2, 1),
                _ => (1, 1, 2),
            };
            assert_eq!(c, expect);
            assert_eq!(euler_characteristic(&s), 2);
            assert_eq!(validate(&s).overall, Overall::Valid);
        }
    }

    #[test]
    fn stabilize_then_destabilize_roundtrip() {
        let t = tpd(1, vec![], vec![], vec![]);
        let s = stabilize(&t, 1, StabSite { x: 1, y: 2 }).unwrap();
        let m12 = s.p12().matching();
        let m31 = s.p31().matching();
        let chain = vec![3, m12.pair(3)];
        assert_eq!(m31.pair(m12.pair(3)), 3);
        let w = DestabWitness { sector: 1, shadow_chain: chain, final_arc: (3, 4) };
        let back = destabilize(&s, &w).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn figure_four_witness_destabilizes() {
        let fig4 = tpd(2, vec![], vec![2], vec![]);
        assert_eq!(patch_counts(&fig4), (2, 1, 1));
        let ws = find_destabilizations(&fig4, 16);
        assert!(!ws.is_empty());
        let w = ws.iter().find(|w| w.sector == 1).unwrap();
        assert_eq!(w.order(), 1);
        let down = destabilize(&fig4, w).unwrap();
        assert_eq!(down.bridges(), 1);
        assert_eq!(patch_counts(&down), (1, 1, 1));
    }

    #[test]
    fn trivial_diagram_has_no_witness() {
        let t = tpd(1, vec![], vec![], vec![]);
        assert!(find_destabilizations(&t, 16).is_empty());
    }

    #[test]
    fn connected_sum_parameters() {
        let t = tpd(1, vec![], vec![], vec![]);
        let fig4 = tpd(2, vec![], vec![2], vec![]);
        let s = connected_sum(&t, &fig4);
        assert_eq!(s.bridges(), 2);
        assert_eq!(patch_counts(&s), (2, 1, 1));
        let both = connected_sum(&fig4, &fig4);
        assert_eq!(both.bridges(), 3);
        assert_eq!(patch_counts(&both), (3, 1, 1));
        assert_eq!(euler_characteristic(&both), 2);
        assert_eq!(validate(&both).overall, Overall::Valid);
    }

    #[test]
    fn cup_preserves_counts() {
        let bl = BandedUnlink::new(
            1,
            BraidWord::new(2, vec![]).unwrap(),
            BraidWord::new(2, vec![]).unwrap(),
            vec![],
        )
        .unwrap();
        let up = cup(&bl).unwrap();
        assert_eq!(up.bridges(), 2);
        assert_eq!(up.bands().len(), 1);
        let r = crate::banded::validate_banded(&up);
        assert_eq!(r.counts, (2, 1, 1));
        assert_eq!(r.chi, 2);
    }

    #[test]
    fn cap_splits_circle() {
        let bl = BandedUnlink::new(
            1,
            BraidWord::new(2, vec![]).unwrap(),
            BraidWord::new(2, vec![]).unwrap(),
            vec![],
        )
        .unwrap();
        let capped = cap(&bl, Band::flat(1, 2).unwrap()).unwrap();
        let r = crate::banded::validate_banded(&capped);
        assert_eq!(r.counts, (1, 0, 2));
        let _ = r;
    }

    fn fusion_chain() -> BandedUnlink {
        BandedUnlink::new(
            3,
            BraidWord::new(6, vec![]).unwrap(),
            BraidWord::new(6, vec![]).unwrap(),
            vec![Band::flat(2, 3).unwrap(), Band::flat(4, 5).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn slide_moves_one_foot_across() {
        use crate::banded::Side;
        let bl = fusion_chain();
        let route = Band::new(2, 6, vec![(3, Side::Over), (4, Side::Over), (5, Side::Over)], 0)
            .unwrap();
        let out = band_slide(&bl, 0, 1, route.clone()).unwrap();
        assert_eq!(out.bands()[0], route);
        // both feet moving is rejected
        let bad = Band::new(1, 6, vec![(2, Side::Over); 0], 0);
        assert!(bad.is_err() || band_slide(&bl, 0, 1, bad.unwrap()).is_err());
    }

    #[test]
    fn swim_keeps_feet_fixed() {
        use crate::banded::Side;
        let bl = BandedUnlink::new(
            3,
            BraidWord::new(6, vec![]).unwrap(),
            BraidWord::new(6, vec![]).unwrap(),
            vec![
                Band::new(
                    1,
                    6,
                    vec![(2, Side::Over), (3, Side::Over), (4, Side::Over), (5, Side::Over)],
                    0,
                )
                .unwrap(),
                Band::flat(3, 4).unwrap(),
            ],
        )
        .unwrap();
        let route = Band::new(
            1,
            6,
            vec![(2, Side::Over), (3, Side::Under), (4, Side::Under), (5, Side::Over)],
            0,
        )
        .unwrap();
        let out = band_swim(&bl, 0, 1, route.clone()).unwrap();
        assert_eq!(out.bands()[0], route);
        // a side flip outside the second band's span is not a swim across it
        let far = Band::new(
            1,
            6,
            vec![(2, Side::Under), (3, Side::Over), (4, Side::Over), (5, Side::Over)],
            0,
        )
        .unwrap();
        assert_eq!(band_swim(&bl, 0, 1, far), Err(MoveError::MoveNotApplicable));
    }
}
