use crate::triplane::TriPlaneDiagram;

/// Geometry of the emitted figure: three tangle panels side by side over a
/// shared boundary line; all dimensions in pixels.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: f64,
    pub height: f64,
    pub stroke: f64,
    pub puncture_radius: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 900.0,
            height: 300.0,
            stroke: 2.0,
            puncture_radius: 3.0,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{:.1}", v)
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64) {
    out.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
        fmt(x1),
        fmt(y1),
        fmt(x2),
        fmt(y2)
    ));
}

/// Splits the under strand around the midpoint so the over strand reads as a
/// continuous arc.
fn crossing(out: &mut String, xa: f64, xb: f64, y0: f64, y1: f64, positive: bool) {
    let (mx, my) = ((xa + xb) / 2.0, (y0 + y1) / 2.0);
    let gap = 0.28;
    let (oxa, oxb, uxa, uxb) = if positive { (xa, xb, xb, xa) } else { (xb, xa, xa, xb) };
    line(
        out,
        uxa,
        y0,
        mx + (uxa - mx) * gap,
        my + (y0 - my) * gap,
    );
    line(
        out,
        mx + (uxb - mx) * gap,
        my + (y1 - my) * gap,
        uxb,
        y1,
    );
    line(out, oxa, y0, oxb, y1);
}

fn panel(out: &mut String, t: &TriPlaneDiagram, which: usize, x0: f64, w: f64, spec: &RenderSpec) {
    let tangle = match which {
        0 => t.p12(),
        1 => t.p23(),
        _ => t.p31(),
    };
    let n = 2 * t.bridges();
    let letters = tangle.word().letters();
    let top = 20.0;
    let bottom = spec.height - 20.0;
    let dx = w / (n as f64 + 1.0);
    let x = |col: usize| x0 + dx * col as f64;
    let rows = letters.len().max(1);
    let dy = (bottom - top - 20.0) / rows as f64;
    // caps join the canonical pairs at the top
    for j in 0..t.bridges() {
        let (x1, x2) = (x(2 * j + 1), x(2 * j + 2));
        let r = (x2 - x1) / 2.0;
        out.push_str(&format!(
            "<path d=\"M {} {} A {} {} 0 0 1 {} {}\"/>\n",
            fmt(x1),
            fmt(top + 20.0),
            fmt(r),
            fmt(r),
            fmt(x2),
            fmt(top + 20.0)
        ));
    }
    let mut y = top + 20.0;
    for &l in letters {
        let c = l.unsigned_abs() as usize;
        for col in 1..=n {
            if col != c && col != c + 1 {
                line(out, x(col), y, x(col), y + dy);
            }
        }
        crossing(out, x(c), x(c + 1), y, y + dy, l > 0);
        y += dy;
    }
    for col in 1..=n {
        line(out, x(col), y, x(col), bottom);
    }
    // boundary line and punctures
    line(out, x0, bottom, x0 + w, bottom);
    for col in 1..=n {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>\n",
            fmt(x(col)),
            fmt(bottom),
            fmt(spec.puncture_radius)
        ));
    }
}

/// Deterministic byte output for fixed inputs; panels ordered 12, 23, 31.
pub fn render_svg(t: &TriPlaneDiagram, spec: &RenderSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        fmt(spec.width),
        fmt(spec.height),
        fmt(spec.width),
        fmt(spec.height)
    ));
    out.push_str(&format!(
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linecap=\"round\">\n",
        fmt(spec.stroke)
    ));
    let pw = spec.width / 3.0;
    for which in 0..3 {
        panel(&mut out, t, which, pw * which as f64 + 10.0, pw - 20.0, spec);
        if which < 2 {
            let xs = pw * (which as f64 + 1.0);
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"0.0\" x2=\"{}\" y2=\"{}\" stroke-dasharray=\"4 4\"/>\n",
                fmt(xs),
                fmt(xs),
                fmt(spec.height)
            ));
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triplane::TriPlaneDiagram;

    fn well_formed(svg: &str) {
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        let mut stack = Vec::new();
        for part in svg.split('<').skip(1) {
            let tag = part.split(|c: char| c.is_whitespace() || c == '>').next().unwrap();
            if let Some(name) = tag.strip_prefix('/') {
                assert_eq!(stack.pop(), Some(name.to_string()));
            } else if !part[..part.find('>').unwrap()].ends_with('/') {
                stack.push(tag.to_string());
            }
        }
        assert!(stack.is_empty());
    }

    #[test]
    fn trivial_panels() {
        let t = TriPlaneDiagram::from_words(1, vec![], vec![], vec![]).unwrap();
        let svg = render_svg(&t, &RenderSpec::default());
        well_formed(&svg);
        assert_eq!(svg.matches("<path").count(), 3);
    }

    #[test]
    fn crossings_have_gaps() {
        let t = TriPlaneDiagram::from_words(2, vec![2], vec![2, 1], vec![-2]).unwrap();
        let svg = render_svg(&t, &RenderSpec::default());
        well_formed(&svg);
        // each crossing contributes two under segments and one over segment
        assert!(svg.matches("<line").count() > 12);
    }

    #[test]
    fn deterministic_output() {
        let t = TriPlaneDiagram::from_words(3, vec![2], vec![2, 1, 4], vec![2, 4, 3]).unwrap();
        let a = render_svg(&t, &RenderSpec::default());
        let b = render_svg(&t, &RenderSpec::default());
        assert_eq!(a, b);
        well_formed(&a);
    }
}
