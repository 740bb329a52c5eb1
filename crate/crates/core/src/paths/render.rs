use super::{MotzkinPath, Step};

/// Plots the height profile on a character grid, one column per step and one
/// row per height (top row first, ground level last).
///
/// An upstep `h → h+1` is drawn as `/` in row `h+1`, a flatstep at height `h`
/// as `-` in row `h`, and a downstep `h → h−1` as `\` in row `h`.
pub fn render_ascii(p: &MotzkinPath) -> String {
    let steps = p.steps();
    let mut cells = Vec::with_capacity(steps.len());
    let mut height = 0usize;
    let mut top = 0usize;
    for &s in steps {
        let (row, glyph) = match s {
            Step::U => {
                height += 1;
                (height, '/')
            }
            Step::F => (height, '-'),
            Step::D => {
                height -= 1;
                (height + 1, '\\')
            }
        };
        top = top.max(row);
        cells.push((row, glyph));
    }
    let lines: Vec<String> =
        (0..=top).rev().map(|row| cells.iter().map(|&(r, g)| if r == row { g } else { ' ' }).collect()).collect();
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> String {
        render_ascii(&s.parse().unwrap())
    }

    #[test]
    fn small_drawings() {
        assert_eq!(r("UD"), "/\\\n  ");
        assert_eq!(r("F"), "-");
        assert_eq!(r("UFD"), "/-\\\n   ");
        assert_eq!(r(""), "");
        assert_eq!(r("UUDDF"), " /\\  \n/  \\ \n    -");
    }
}
