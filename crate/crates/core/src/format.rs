//! Number rendering shared by every text and CSV output.

/// Formats `x` with 17 significant digits, trailing zeros removed, in the
/// manner of C's `%.17g`. Seventeen digits identify an `f64` uniquely, so
/// parsing the result gives back `x` bit for bit.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_fraction(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_fraction(mantissa.to_string()), exp)
    }
}

fn trim_fraction(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::g17;

    #[test]
    fn short_values_stay_short() {
        assert_eq!(g17(0.25), "0.25");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(-2.5), "-2.5");
        assert_eq!(g17(1.25), "1.25");
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(g17(1e-12), "9.9999999999999998e-13");
        assert_eq!(g17(1e20), "1e20");
    }

    #[test]
    fn round_trips() {
        for &x in &[
            0.1,
            1.0 / 3.0,
            2.0f64.sqrt(),
            1e-300,
            6.02214076e23,
            -7.5e-7,
            0.00390625,
        ] {
            assert_eq!(g17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }
}
