use std::collections::BTreeSet;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::linkdiag::{
    certify_unlink_with_budget, component_count, plat_union, rebuild, LinkDiagram, UnlinkVerdict,
    DEFAULT_MOVE_BUDGET,
};
use crate::triplane::Overall;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BandedError {
    #[error("band foot {0} out of range for {1} punctures")]
    FootOutOfRange(usize, usize),
    #[error("band feet coincide at puncture {0}")]
    DegenerateBand(usize),
    #[error("bypass list must cover exactly the punctures strictly between the feet")]
    BadBypassList,
    #[error("bands {0} and {1} cannot be embedded disjointly along the equator")]
    BandsNotDisjoint(usize, usize),
    #[error("word has {0} strands, expected {1}")]
    WrongStrandCount(usize, usize),
    #[error("not a banded bridge splitting: {0}")]
    NotABandedBridgeSplitting(String),
    #[error("no sector-2 standard position found within budget")]
    StandardPositionNotFound,
}

/// Which side of the bridge sphere's equatorial arc a band passes a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Over,
    Under,
}

/// A band in equatorial normal form: feet at two punctures, core routed
/// monotonically along the equator, bypassing every intervening puncture on a
/// recorded side. `curls` counts full twists of the band relative to the
/// surface framing, realized as planar curls at the lower-numbered foot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    start: usize,
    end: usize,
    bypasses: Vec<(usize, Side)>,
    curls: i32,
}

impl Band {
    pub fn new(
        start: usize,
        end: usize,
        bypasses: Vec<(usize, Side)>,
        curls: i32,
    ) -> Result<Self, BandedError> {
        if start == end {
            return Err(BandedError::DegenerateBand(start));
        }
        let (lo, hi) = (start.min(end), start.max(end));
        let listed: BTreeSet<usize> = bypasses.iter().map(|&(p, _)| p).collect();
        let expected: BTreeSet<usize> = (lo + 1..hi).collect();
        if listed != expected || listed.len() != bypasses.len() {
            return Err(BandedError::BadBypassList);
        }
        let mut bypasses = bypasses;
        bypasses.sort_by_key(|&(p, _)| p);
        Ok(Band { start, end, bypasses, curls })
    }

    pub fn flat(start: usize, end: usize) -> Result<Self, BandedError> {
        Band::new(start, end, Vec::new(), 0)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn lo(&self) -> usize {
        self.start.min(self.end)
    }

    pub fn hi(&self) -> usize {
        self.start.max(self.end)
    }

    pub fn bypasses(&self) -> &[(usize, Side)] {
        &self.bypasses
    }

    pub fn curls(&self) -> i32 {
        self.curls
    }

    fn side_at(&self, p: usize) -> Option<Side> {
        self.bypasses.iter().find(|&&(q, _)| q == p).map(|&(_, s)| s)
    }

    /// Vertical-order level at a puncture column: 0 at a foot, ±1 for a bypass.
    fn level_at(&self, p: usize) -> Option<i32> {
        if p == self.start || p == self.end {
            return Some(0);
        }
        self.side_at(p).map(|s| match s {
            Side::Over => 1,
            Side::Under => -1,
        })
    }
}

/// Pairwise disjointness along the equator. Routes are x-monotone with nested
/// or disjoint spans, so two bands are disjoint iff their spans do not cross
/// and their vertical order is consistent across every puncture column where
/// it is forced (differing levels force it; equal nonzero levels leave it
/// free).
fn check_disjoint(bands: &[Band]) -> Result<(), BandedError> {
    for i in 0..bands.len() {
        for j in i + 1..bands.len() {
            let (r, s) = (&bands[i], &bands[j]);
            for foot in [s.start, s.end] {
                if foot == r.start || foot == r.end {
                    return Err(BandedError::BandsNotDisjoint(i, j));
                }
            }
            let lo = r.lo().max(s.lo());
            let hi = r.hi().min(s.hi());
            let nested_or_apart = r.hi() < s.lo()
                || s.hi() < r.lo()
                || (r.lo() < s.lo() && s.hi() < r.hi())
                || (s.lo() < r.lo() && r.hi() < s.hi());
            if !nested_or_apart {
                return Err(BandedError::BandsNotDisjoint(i, j));
            }
            let mut sign = 0;
            for p in lo..=hi {
                let (Some(lr), Some(ls)) = (r.level_at(p), s.level_at(p)) else {
                    continue;
                };
                if lr == ls {
                    continue;
                }
                let here = if lr > ls { 1 } else { -1 };
                if sign == 0 {
                    sign = here;
                } else if sign != here {
                    return Err(BandedError::BandsNotDisjoint(i, j));
                }
            }
        }
    }
    Ok(())
}

/// An unlink in b-bridge plat position together with bands in equatorial
/// normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandedUnlink {
    bridges: usize,
    word12: BraidWord,
    word31: BraidWord,
    bands: Vec<Band>,
}

impl BandedUnlink {
    pub fn new(
        bridges: usize,
        word12: BraidWord,
        word31: BraidWord,
        bands: Vec<Band>,
    ) -> Result<Self, BandedError> {
        let n = 2 * bridges;
        for w in [&word12, &word31] {
            if w.strands() != n {
                return Err(BandedError::WrongStrandCount(w.strands(), n));
            }
        }
        for band in &bands {
            for foot in [band.start, band.end] {
                if foot < 1 || foot > n {
                    return Err(BandedError::FootOutOfRange(foot, n));
                }
            }
            if band.hi() > n {
                return Err(BandedError::FootOutOfRange(band.hi(), n));
            }
        }
        check_disjoint(&bands)?;
        Ok(BandedUnlink { bridges, word12, word31, bands })
    }

    pub fn bridges(&self) -> usize {
        self.bridges
    }

    pub fn word12(&self) -> &BraidWord {
        &self.word12
    }

    pub fn word31(&self) -> &BraidWord {
        &self.word31
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// The underlying unlink L as a diagram.
    pub fn unlink_diagram(&self) -> LinkDiagram {
        plat_union(&self.word12, &self.word31).expect("equal strand counts by construction")
    }
}

struct Builder {
    next_edge: usize,
    crossings: Vec<[usize; 4]>,
    merges: Vec<(usize, usize)>,
    cur: Vec<usize>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        let e = self.next_edge;
        self.next_edge += 1;
        e
    }

    fn letter(&mut self, k: i32) {
        let pos = k.unsigned_abs() as usize;
        let (bl, br) = (self.cur[pos - 1], self.cur[pos]);
        let tl = self.fresh();
        let tr = self.fresh();
        // positive letter: the strand entering bottom-left passes over
        let cr = if k > 0 { [br, tr, tl, bl] } else { [bl, br, tr, tl] };
        self.crossings.push(cr);
        self.cur[pos - 1] = tl;
        self.cur[pos] = tr;
    }

    /// Horizontal band arc crossing the open strand at puncture `p`, read
    /// west to east; returns the arc's continuation edge.
    fn bypass(&mut self, a: usize, p: usize, side: Side) -> usize {
        let a2 = self.fresh();
        let v2 = self.fresh();
        let v = self.cur[p - 1];
        let cr = match side {
            Side::Over => [v, a2, v2, a],
            Side::Under => [a, v, a2, v2],
        };
        self.crossings.push(cr);
        self.cur[p - 1] = v2;
        a2
    }

    /// R-I kink on a horizontal arc; sign follows the curl sign.
    fn kink(&mut self, a: usize, positive: bool) -> usize {
        let e = self.fresh();
        let a2 = self.fresh();
        let cr = if positive { [a, e, e, a2] } else { [e, a, a2, e] };
        self.crossings.push(cr);
        a2
    }

    /// Crossing between the two horizontal band sides (lower edge `lo`,
    /// upper edge `hi`), read west to east; both continuations are returned.
    fn clasp(&mut self, lo: usize, hi: usize, positive: bool) -> (usize, usize) {
        let el = self.fresh();
        let eh = self.fresh();
        let cr = if positive { [el, eh, hi, lo] } else { [lo, el, eh, hi] };
        self.crossings.push(cr);
        (el, eh)
    }
}

/// Resolves every band: cuts L at the band feet and reconnects along the two
/// band sides, lower sides below the equator (outermost band first), upper
/// sides above (innermost first).
pub fn resolve(bl: &BandedUnlink) -> LinkDiagram {
    let n = 2 * bl.bridges;
    let mut b = Builder { next_edge: 0, crossings: Vec::new(), merges: Vec::new(), cur: Vec::new() };
    for _ in 0..bl.bridges {
        let e = b.fresh();
        b.cur.push(e);
        b.cur.push(e);
    }
    for &k in bl.word12.letters() {
        b.letter(k);
    }
    let mut order: Vec<usize> = (0..bl.bands.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(bl.bands[i].hi() - bl.bands[i].lo()), bl.bands[i].lo()));
    // lower band sides, with curls realized at the lo foot
    let mut cup_start: Vec<Option<(usize, usize)>> = vec![None; bl.bands.len()];
    for &i in &order {
        let band = &bl.bands[i];
        let (x, y) = (band.lo(), band.hi());
        let t = band.curls;
        let mut a = b.cur[x - 1];
        if t != 0 {
            let positive = t > 0;
            for _ in 0..t.unsigned_abs() {
                a = b.kink(a, positive);
            }
            let w0 = b.fresh();
            let mut u = w0;
            for _ in 0..2 * t.unsigned_abs() {
                let (el, eh) = b.clasp(a, u, positive);
                a = el;
                u = eh;
            }
            cup_start[i] = Some((w0, u));
        }
        for &(p, side) in &band.bypasses {
            a = b.bypass(a, p, side);
        }
        b.merges.push((a, b.cur[y - 1]));
    }
    // upper band sides
    for &i in order.iter().rev() {
        let band = &bl.bands[i];
        let (x, y) = (band.lo(), band.hi());
        let t = band.curls;
        let (w0, mut u) = cup_start[i].unwrap_or_else(|| {
            let e = b.fresh();
            (e, e)
        });
        if t != 0 {
            for _ in 0..t.unsigned_abs() {
                u = b.kink(u, t > 0);
            }
        }
        b.cur[x - 1] = w0;
        for &(p, side) in &band.bypasses {
            u = b.bypass(u, p, side);
        }
        b.cur[y - 1] = u;
    }
    for &k in bl.word31.mirror_reverse().letters() {
        b.letter(k);
    }
    for i in 0..n / 2 {
        b.merges.push((b.cur[2 * i], b.cur[2 * i + 1]));
    }
    let all: Vec<usize> = (0..b.next_edge).collect();
    rebuild(&b.crossings, &[], &b.merges, 0, b.next_edge, &all)
}

#[derive(Debug, Clone)]
pub struct BandedReport {
    pub l_verdict: UnlinkVerdict,
    pub resolved_verdict: UnlinkVerdict,
    /// (c1, c2, c3) with c2 = b − |bands|.
    pub counts: (usize, i64, usize),
    pub chi: i64,
    pub overall: Overall,
}

pub fn validate_banded(bl: &BandedUnlink) -> BandedReport {
    validate_banded_with_budget(bl, DEFAULT_MOVE_BUDGET)
}

pub fn validate_banded_with_budget(bl: &BandedUnlink, budget: usize) -> BandedReport {
    let l = bl.unlink_diagram();
    let resolved = resolve(bl);
    let c1 = component_count(&l).expect("plat diagrams are well formed");
    let c3 = component_count(&resolved).expect("resolved diagrams are well formed");
    let c2 = bl.bridges as i64 - bl.bands.len() as i64;
    let l_verdict = certify_unlink_with_budget(&l, Some(c1), budget);
    let resolved_verdict = certify_unlink_with_budget(&resolved, Some(c3), budget);
    let chi = c1 as i64 + c2 + c3 as i64 - bl.bridges as i64;
    let overall = if l_verdict.is_not_unlink() || resolved_verdict.is_not_unlink() || c2 < 1 {
        Overall::Invalid
    } else if l_verdict.is_certified() && resolved_verdict.is_certified() {
        Overall::Valid
    } else {
        Overall::ProbablyValid
    };
    BandedReport { l_verdict, resolved_verdict, counts: (c1, c2, c3), chi, overall }
}

/// Witness that a banded unlink is a banded bridge splitting: one dual
/// bridge-disk shadow per band, recorded as the plat letters that carry the
/// band surgery into the 23-tangle word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandedBridgeCert {
    pub dual_shadows: Vec<Vec<i32>>,
}

/// Surgers the 12-matching along every band; errors if a band closes a loop.
fn surgered_matching(bl: &BandedUnlink) -> Result<Vec<usize>, BandedError> {
    let n = 2 * bl.bridges;
    let m12 = crate::braid::plat_matching(&bl.word12).expect("even strands");
    let mut m: Vec<usize> = (1..=n).map(|p| m12.pair(p)).collect();
    for band in &bl.bands {
        let (p, q) = (band.lo(), band.hi());
        let (pp, qq) = (m[p - 1], m[q - 1]);
        if pp == q {
            return Err(BandedError::NotABandedBridgeSplitting(format!(
                "band {p}-{q} closes a loop in the upper tangle"
            )));
        }
        m[p - 1] = q;
        m[q - 1] = p;
        m[pp - 1] = qq;
        m[qq - 1] = pp;
    }
    Ok(m)
}

/// Letters realizing the transposition of punctures a and b (a < b) as a
/// transport palindrome; the sign at each crossed column follows `side_of`.
fn transport_block(a: usize, b: usize, side_of: impl Fn(usize) -> Side) -> Vec<i32> {
    let sgn = |col: usize| match side_of(col) {
        Side::Over => 1i32,
        Side::Under => -1i32,
    };
    let mut out: Vec<i32> = (a..b).rev().map(|k| sgn(k) * k as i32).collect();
    out.extend((a + 1..b).map(|k| sgn(k) * k as i32));
    out
}

/// Derives the canonical dual-shadow letters for each band in stored order:
/// the transposition joining the band's high foot to the current partner of
/// its low foot, weaving per the band's bypass sides.
pub fn default_cert(bl: &BandedUnlink) -> Result<BandedBridgeCert, BandedError> {
    let n = 2 * bl.bridges;
    let m12 = crate::braid::plat_matching(&bl.word12).expect("even strands");
    let mut m: Vec<usize> = (1..=n).map(|p| m12.pair(p)).collect();
    let mut shadows = Vec::new();
    for band in &bl.bands {
        if band.curls != 0 {
            return Err(BandedError::NotABandedBridgeSplitting(
                "curled bands have no equatorial dual shadow".into(),
            ));
        }
        let (p, q) = (band.lo(), band.hi());
        let (pp, qq) = (m[p - 1], m[q - 1]);
        if pp == q {
            return Err(BandedError::NotABandedBridgeSplitting(format!(
                "band {p}-{q} closes a loop in the upper tangle"
            )));
        }
        let (a, b) = (pp.min(q), pp.max(q));
        shadows.push(transport_block(a, b, |col| {
            band.side_at(col).unwrap_or(Side::Over)
        }));
        m[p - 1] = q;
        m[q - 1] = p;
        m[pp - 1] = qq;
        m[qq - 1] = pp;
    }
    Ok(BandedBridgeCert { dual_shadows: shadows })
}

/// Builds the induced tri-plane diagram: P12 and P31 keep their words, P23 is
/// word12 extended by the dual-shadow letters of each band.
pub fn to_triplane(
    bl: &BandedUnlink,
    cert: &BandedBridgeCert,
) -> Result<crate::triplane::TriPlaneDiagram, BandedError> {
    use crate::triplane::{patch_counts, TangleDiagram, TriPlaneDiagram};
    let n = 2 * bl.bridges;
    if cert.dual_shadows.len() != bl.bands.len() {
        return Err(BandedError::NotABandedBridgeSplitting(format!(
            "{} shadows for {} bands",
            cert.dual_shadows.len(),
            bl.bands.len()
        )));
    }
    let target = surgered_matching(bl)?;
    let mut letters = bl.word12.letters().to_vec();
    for block in &cert.dual_shadows {
        letters.extend_from_slice(block);
    }
    let w23 = BraidWord::new(n, letters)
        .map_err(|e| BandedError::NotABandedBridgeSplitting(e.to_string()))?;
    let m23 = crate::braid::plat_matching(&w23).expect("even strands");
    if (1..=n).any(|p| m23.pair(p) != target[p - 1]) {
        return Err(BandedError::NotABandedBridgeSplitting(
            "dual shadows do not realize the surgered matching".into(),
        ));
    }
    let b = bl.bridges;
    let t = TriPlaneDiagram::new(
        TangleDiagram::new(b, bl.word12.clone()).expect("strand count checked"),
        TangleDiagram::new(b, w23).expect("strand count checked"),
        TangleDiagram::new(b, bl.word31.clone()).expect("strand count checked"),
    )
    .expect("equal bridge numbers");
    let (_, c2, _) = patch_counts(&t);
    if c2 as i64 != b as i64 - bl.bands.len() as i64 {
        return Err(BandedError::NotABandedBridgeSplitting(format!(
            "surgery yields {c2} sector-2 circles, expected {}",
            b as i64 - bl.bands.len() as i64
        )));
    }
    Ok(t)
}

/// Recovers a banded unlink from a tri-plane diagram: band feet come from the
/// sector-2 shadow curves, bypass sides from a bounded search gated by unlink
/// certification of the resolution.
pub fn from_triplane(
    t: &crate::triplane::TriPlaneDiagram,
    budget: usize,
) -> Result<(BandedUnlink, BandedBridgeCert), BandedError> {
    use crate::triplane::patch_counts;
    let m12 = t.p12().matching();
    let m23 = t.p23().matching();
    let n = 2 * t.bridges();
    // sector-2 curves: alternating m12/m23 arcs; dropping one m23 arc per
    // curve leaves the band feet, and the drop choice is part of the search
    let mut curves: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut arcs = Vec::new();
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m23.pair(p);
            seen[q] = true;
            arcs.push((p.min(q), p.max(q)));
            p = m12.pair(q);
            if p == start {
                break;
            }
        }
        arcs.sort();
        curves.push(arcs);
    }
    let (c1, _, c3) = patch_counts(t);
    // mixed-radix drop counter over curves, side masks inside each choice
    let mut drops = vec![0usize; curves.len()];
    let mut spent = 0usize;
    'outer: loop {
        let mut feet: Vec<(usize, usize)> = Vec::new();
        for (arcs, &d) in curves.iter().zip(&drops) {
            feet.extend(arcs.iter().enumerate().filter(|&(i, _)| i != d).map(|(_, &a)| a));
        }
        feet.sort();
        let gaps: Vec<usize> = feet.iter().map(|&(x, y)| y - x - 1).collect();
        let total_bits: usize = gaps.iter().sum();
        let tries = if total_bits >= usize::BITS as usize - 1 {
            usize::MAX
        } else {
            1usize << total_bits
        };
        for mask in 0..tries {
            spent += 1;
            if spent > budget.max(1) {
                break 'outer;
            }
            let mut bits = mask;
            let mut bands = Vec::new();
            for (&(x, y), &g) in feet.iter().zip(&gaps) {
                let byps: Vec<(usize, Side)> = (0..g)
                    .map(|i| {
                        let side = if bits >> i & 1 == 0 { Side::Over } else { Side::Under };
                        (x + 1 + i, side)
                    })
                    .collect();
                bits >>= g;
                match Band::new(x, y, byps, 0) {
                    Ok(b) => bands.push(b),
                    Err(_) => break,
                }
            }
            if bands.len() != feet.len() {
                continue;
            }
            let Ok(bl) = BandedUnlink::new(
                t.bridges(),
                t.p12().word().clone(),
                t.p31().word().clone(),
                bands,
            ) else {
                continue;
            };
            let Ok(cert) = default_cert(&bl) else { continue };
            if to_triplane(&bl, &cert).is_err() {
                continue;
            }
            let resolved = resolve(&bl);
            if component_count(&resolved).ok() != Some(c3) {
                continue;
            }
            if certify_unlink_with_budget(&resolved, Some(c3), budget).is_not_unlink() {
                continue;
            }
            let l = bl.unlink_diagram();
            if component_count(&l).ok() != Some(c1) {
                continue;
            }
            return Ok((bl, cert));
        }
        // advance the drop counter
        let mut i = 0;
        loop {
            if i == drops.len() {
                break 'outer;
            }
            drops[i] += 1;
            if drops[i] < curves[i].len() {
                break;
            }
            drops[i] = 0;
            i += 1;
        }
    }
    Err(BandedError::StandardPositionNotFound)
}

/// Parses the `.bnd` line format; `#` starts a comment line anywhere.
pub fn parse_bnd(text: &str) -> Result<BandedUnlink, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or("empty file")?;
    let b: usize = header
        .strip_prefix("banded b=")
        .ok_or(format!("line {ln}: expected `banded b=<int>`"))?
        .trim()
        .parse()
        .map_err(|_| format!("line {ln}: bad bridge number"))?;
    if b == 0 {
        return Err(format!("line {ln}: bridge number must be positive"));
    }
    let mut words = Vec::new();
    for tag in ["L12:", "L31:"] {
        let (ln, line) = lines.next().ok_or(format!("missing `{tag}` line"))?;
        let body = line
            .strip_prefix(tag)
            .ok_or(format!("line {ln}: expected `{tag} <word>`"))?;
        words.push(BraidWord::parse(2 * b, body).map_err(|e| format!("line {ln}: {e}"))?);
    }
    let mut bands = Vec::new();
    for (ln, line) in lines {
        let body = line
            .strip_prefix("band:")
            .ok_or(format!("line {ln}: expected `band:` line"))?;
        bands.push(parse_band(body).map_err(|e| format!("line {ln}: {e}"))?);
    }
    let bu = BandedUnlink::new(b, words[0].clone(), words[1].clone(), bands)
        .map_err(|e| e.to_string())?;
    Ok(bu)
}

fn parse_band(body: &str) -> Result<Band, String> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    if toks.len() < 3 {
        return Err("expected `<start> <end> <dir> [...]`".into());
    }
    let start: usize = toks[0].parse().map_err(|_| "bad start puncture".to_string())?;
    let end: usize = toks[1].parse().map_err(|_| "bad end puncture".to_string())?;
    let dir = toks[2];
    let expected_dir = if start < end { "+" } else { "-" };
    if dir != expected_dir {
        return Err(format!("direction `{dir}` inconsistent with feet {start} {end}"));
    }
    let mut curls: i32 = 0;
    let mut bypasses = Vec::new();
    for tok in &toks[3..] {
        let (p, side) = tok
            .split_once(':')
            .ok_or(format!("bad route token `{tok}`"))?;
        let p: usize = p.parse().map_err(|_| format!("bad route token `{tok}`"))?;
        let side = match side {
            "over" => Side::Over,
            "under" => Side::Under,
            _ => return Err(format!("bad route token `{tok}`")),
        };
        if p == 0 {
            // curl tokens: 0:over is a positive full twist, 0:under negative
            if !bypasses.is_empty() {
                return Err("curl tokens must precede bypass tokens".into());
            }
            curls += if side == Side::Over { 1 } else { -1 };
        } else {
            bypasses.push((p, side));
        }
    }
    Band::new(start, end, bypasses, curls).map_err(|e| e.to_string())
}

/// Canonical `.bnd` form; parse ∘ emit is the identity.
pub fn emit_bnd(bl: &BandedUnlink) -> String {
    let mut out = format!(
        "banded b={}\nL12: {}\nL31: {}\n",
        bl.bridges(),
        bl.word12(),
        bl.word31()
    );
    for band in bl.bands() {
        let dir = if band.start() < band.end() { "+" } else { "-" };
        out.push_str(&format!("band: {} {} {}", band.start(), band.end(), dir));
        let curl_tok = if band.curls() > 0 { " 0:over" } else { " 0:under" };
        for _ in 0..band.curls().unsigned_abs() {
            out.push_str(curl_tok);
        }
        for &(p, side) in band.bypasses() {
            let s = if side == Side::Over { "over" } else { "under" };
            out.push_str(&format!(" {p}:{s}"));
        }
        out.push('\n');
    }
    out
}
