use tpk::banded::{resolve, Band, BandedUnlink, Side};
use tpk::braid::BraidWord;
use tpk::group::{abelianization, count_homs, presentation_from_banded};
use tpk::linkdiag::{certify_unlink, component_count};

fn all_bands(max_span: usize, n: usize, curl_range: i32) -> Vec<Band> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n.min(i + max_span) {
            let gap = j - i - 1;
            for mask in 0..(1u32 << gap) {
                let bypasses: Vec<(usize, Side)> = (0..gap)
                    .map(|t| {
                        let side = if mask >> t & 1 == 0 { Side::Over } else { Side::Under };
                        (i + 1 + t, side)
                    })
                    .collect();
                for c in -curl_range..=curl_range {
                    out.push(Band::new(i, j, bypasses.clone(), c).unwrap());
                }
            }
        }
    }
    out
}

fn is_trefoil(p: &tpk::group::GroupPresentation) -> bool {
    let abx = abelianization(p);
    abx.free_rank == 1
        && abx.torsion.is_empty()
        && count_homs(p, 3).unwrap() == 12
        && count_homs(p, 4).unwrap() == 96
}

#[test]
fn focused_stage2() {
    let w12 = BraidWord::new(8, vec![2, 2, 2]).unwrap();
    let blocks: [Vec<i32>; 4] = [
        vec![4, 5, 6, 7],
        vec![2, 3, 4, 5, 6, 7],
        vec![-4, -5],
        vec![2, 2, 2],
    ];
    let letters: Vec<i32> = blocks.concat();
    let w31 = BraidWord::new(8, letters).unwrap();
    let fusions: Vec<Band> = vec![
        Band::flat(1, 2).unwrap(),
        Band::new(1, 2, vec![], 1).unwrap(),
        Band::new(1, 2, vec![], -1).unwrap(),
    ];
    let cands = all_bands(7, 8, 2);
    println!("{} dual candidates", cands.len());
    let mut pass = 0;
    for u in &fusions {
        for v in &cands {
            let Ok(both) =
                BandedUnlink::new(4, w12.clone(), w31.clone(), vec![u.clone(), v.clone()])
            else {
                continue;
            };
            let rb = resolve(&both);
            if component_count(&rb).unwrap_or(0) != 2 {
                continue;
            }
            if !certify_unlink(&rb, Some(2)).is_certified() {
                continue;
            }
            let Ok(p) = presentation_from_banded(&both) else { continue };
            if is_trefoil(&p) {
                println!(
                    "PASS u=({},{},{:?},{}) v=({},{},{:?},{})",
                    u.lo(),
                    u.hi(),
                    u.bypasses(),
                    u.curls(),
                    v.lo(),
                    v.hi(),
                    v.bypasses(),
                    v.curls()
                );
                pass += 1;
            }
        }
        println!("fusion ({},{},{}) done, {pass} passes so far", u.lo(), u.hi(), u.curls());
    }
    println!("total {pass}");
}
