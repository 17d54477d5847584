use std::fmt::Display;

/// Groups the digits of a decimal number in threes: `69815601` -> `69,815,601`.
pub fn sep(n: impl Display) -> String {
    let s = n.to_string();
    let mut out = String::with_capacity(s.len() + s.len() / 3);
    for (i, c) in s.chars().enumerate() {
        if i > 0 && (s.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}

/// Left-aligned label, right-aligned value.
pub fn row(label: &str, value: impl Display) -> String {
    // Display impls that ignore width would break the alignment otherwise.
    let value = value.to_string();
    format!("{label:<28}{value:>20}\n")
}

pub fn one_based(range: std::ops::Range<usize>) -> String {
    if range.is_empty() {
        "none".to_string()
    } else if range.len() == 1 {
        format!("{}", range.start + 1)
    } else {
        format!("{}..{}", range.start + 1, range.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separators() {
        assert_eq!(sep(0), "0");
        assert_eq!(sep(289), "289");
        assert_eq!(sep(4096), "4,096");
        assert_eq!(sep(69815601u64), "69,815,601");
        assert_eq!(sep(5049942016u64), "5,049,942,016");
    }

    #[test]
    fn ranges() {
        assert_eq!(one_based(0..0), "none");
        assert_eq!(one_based(2..3), "3");
        assert_eq!(one_based(0..4), "1..4");
    }
}
