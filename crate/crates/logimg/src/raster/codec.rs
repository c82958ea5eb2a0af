//! The 8-bit codec between pixel codes and the open cube.
//!
//! A code `c` maps to the centre of its quantization cell in (0, 1), then
//! through the affine change of cube `v = 2u - 1`:
//!
//! ```text
//! decode(c) = 2 * (c + 0.5) / 256 - 1
//! ```
//!
//! The half-code offset keeps all 256 codes strictly inside (-1, 1), so
//! `atanh` is always finite, and makes the codec exactly invertible: every
//! step is a dyadic rational operation, exact in an f64.

use crate::logspace::LogScalar;

/// Map an 8-bit code into the open interval. Exact for every code.
pub fn decode_channel(code: u8) -> LogScalar {
    let unit = (code as f64 + 0.5) / 256.0;
    LogScalar::new(2.0 * unit - 1.0).expect("codes decode to finite interior values")
}

/// Nearest 8-bit code for a channel value; saturates at 0 and 255.
/// Exact inverse of [`decode_channel`] on all 256 codes.
pub fn encode_channel(value: LogScalar) -> u8 {
    let code = (128.0 * (value.value() + 1.0) - 0.5).round();
    code.clamp(0.0, 255.0) as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logspace::DOMAIN_MARGIN;

    #[test]
    fn decode_examples() {
        assert_eq!(decode_channel(128).value(), 0.00390625);
        assert_eq!(decode_channel(0).value(), -0.99609375);
        assert_eq!(decode_channel(255).value(), 0.99609375);
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_channel(LogScalar::new(0.00390625).unwrap()), 128);
        assert_eq!(encode_channel(LogScalar::new(0.99609375).unwrap()), 255);
        // saturated extreme lands on code 0
        assert_eq!(encode_channel(LogScalar::new(-1.0).unwrap()), 0);
        assert_eq!(encode_channel(LogScalar::new(1.0 - DOMAIN_MARGIN).unwrap()), 255);
    }

    #[test]
    fn round_trip_is_exact_for_all_codes() {
        for code in 0..=255u8 {
            assert_eq!(encode_channel(decode_channel(code)), code);
        }
    }

    #[test]
    fn decode_is_strictly_increasing_and_symmetric() {
        for code in 0..255u8 {
            assert!(decode_channel(code).value() < decode_channel(code + 1).value());
        }
        for code in 0..=255u8 {
            assert_eq!(
                decode_channel(code).value(),
                -decode_channel(255 - code).value()
            );
        }
    }
}
