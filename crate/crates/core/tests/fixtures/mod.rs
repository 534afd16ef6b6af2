//! Hand-entered expansions of the small closed forms.
//!
//! Each expansion was transcribed term by term from an independent worked
//! computation and is kept as plain text, so a slip in the library's algebra
//! cannot silently rewrite the expected value.  `parse` scales the integer
//! body by the recorded rational factor.

use monotri::MultiPoly;
use num_rational::BigRational;

pub struct Expansion {
    pub scale: (i64, i64),
    pub body: &'static str,
}

impl Expansion {
    pub fn parse(&self, nvars: usize) -> MultiPoly {
        let body = monotri::text::parse_poly(self.body, nvars)
            .expect("fixture body parses");
        body.scale(&BigRational::new(self.scale.0.into(), self.scale.1.into()))
    }
}

/// Expansions of the triangle-counting polynomial in n variables, n = 1..=4.
pub fn triangle_expansion(n: usize) -> Option<Expansion> {
    let expansion = match n {
        1 => Expansion { scale: (1, 1), body: "1" },
        2 => Expansion { scale: (1, 1), body: "1 - k1 + k2" },
        3 => Expansion {
            scale: (1, 2),
            body: "-3*k1 + k1^2 + 2*k1*k2 - k1^2*k2 - 2*k2^2 + k1*k2^2 \
                   + 3*k3 - 4*k1*k3 + k1^2*k3 + 2*k2*k3 - k2^2*k3 + k3^2 \
                   - k1*k3^2 + k2*k3^2",
        },
        4 => Expansion {
            scale: (1, 12),
            body: "20*k2 + 11*k1*k2 - 16*k1^2*k2 + 3*k1^3*k2 + 4*k1*k2^2 \
                   + 3*k1^2*k2^2 - k1^3*k2^2 + 4*k2^3 - 5*k1*k2^3 + k1^2*k2^3 \
                   - 20*k3 + 16*k1*k3 - 4*k1^2*k3 - 27*k2*k3 + 9*k1^2*k2*k3 \
                   - 2*k1^3*k2*k3 - 3*k1^2*k2^2*k3 + k1^3*k2^2*k3 - 3*k2^3*k3 \
                   + 4*k1*k2^3*k3 - k1^2*k2^3*k3 + 16*k1*k3^2 - 12*k1^2*k3^2 \
                   + 2*k1^3*k3^2 - 9*k1*k2*k3^2 + 6*k1^2*k2*k3^2 \
                   - k1^3*k2*k3^2 + 9*k2^2*k3^2 - 3*k1*k2^2*k3^2 - 3*k2^3*k3^2 \
                   + k1*k2^3*k3^2 - 4*k3^3 + 8*k1*k3^3 - 2*k1^2*k3^3 \
                   - 3*k2*k3^3 - 2*k1*k2*k3^3 + k1^2*k2*k3^3 + 3*k2^2*k3^3 \
                   - k1*k2^2*k3^3 - 27*k1*k4 + 20*k1^2*k4 - 3*k1^3*k4 \
                   + 16*k2*k4 + 24*k1*k2*k4 - 24*k1^2*k2*k4 + 4*k1^3*k2*k4 \
                   - 16*k2^2*k4 + 9*k1*k2^2*k4 + 3*k1^2*k2^2*k4 \
                   - k1^3*k2^2*k4 + 8*k2^3*k4 - 6*k1*k2^3*k4 + k1^2*k2^3*k4 \
                   + 11*k3*k4 - 24*k1*k3*k4 + 15*k1^2*k3*k4 - 2*k1^3*k3*k4 \
                   - 9*k2^2*k3*k4 + 2*k2^3*k3*k4 - 4*k3^2*k4 + 9*k1*k3^2*k4 \
                   - 6*k1^2*k3^2*k4 + k1^3*k3^2*k4 + 3*k2^2*k3^2*k4 \
                   - k2^3*k3^2*k4 - 5*k3^3*k4 + 6*k1*k3^3*k4 - k1^2*k3^3*k4 \
                   - 4*k2*k3^3*k4 + k2^2*k3^3*k4 - 20*k1*k4^2 + 9*k1^2*k4^2 \
                   - k1^3*k4^2 + 4*k2*k4^2 + 15*k1*k2*k4^2 - 9*k1^2*k2*k4^2 \
                   + k1^3*k2*k4^2 - 12*k2^2*k4^2 + 6*k1*k2^2*k4^2 \
                   + 2*k2^3*k4^2 - k1*k2^3*k4^2 + 16*k3*k4^2 - 24*k1*k3*k4^2 \
                   + 9*k1^2*k3*k4^2 - k1^3*k3*k4^2 + 9*k2*k3*k4^2 \
                   - 6*k2^2*k3*k4^2 + k2^3*k3*k4^2 + 3*k3^2*k4^2 \
                   - 3*k1*k3^2*k4^2 + 3*k2*k3^2*k4^2 - k3^3*k4^2 \
                   + k1*k3^3*k4^2 - k2*k3^3*k4^2 - 3*k1*k4^3 + k1^2*k4^3 \
                   + 2*k1*k2*k4^3 - k1^2*k2*k4^3 - 2*k2^2*k4^3 \
                   + k1*k2^2*k4^3 + 3*k3*k4^3 - 4*k1*k3*k4^3 + k1^2*k3*k4^3 \
                   + 2*k2*k3*k4^3 - k2^2*k3*k4^3 + k3^2*k4^3 - k1*k3^2*k4^3 \
                   + k2*k3^2*k4^3",
        },
        _ => return None,
    };
    Some(expansion)
}

/// Expansions of the one-variable apex polynomial of an order-n triangle
/// over the fixed base (1, ..., n), for n = 1..=6.
pub fn apex_expansion(n: usize) -> Option<Expansion> {
    let expansion = match n {
        1 => Expansion { scale: (1, 1), body: "1" },
        2 => Expansion { scale: (1, 1), body: "-1 + 3*k1 - k1^2" },
        3 => Expansion {
            scale: (1, 12),
            body: "48 - 92*k1 + 103*k1^2 - 40*k1^3 + 5*k1^4",
        },
        4 => Expansion {
            scale: (1, 72),
            body: "-2160 + 5910*k1 - 5407*k1^2 + 2940*k1^3 - 919*k1^4 \
                   + 150*k1^5 - 10*k1^6",
        },
        5 => Expansion {
            scale: (1, 1440),
            body: "584640 - 1644072*k1 + 1970008*k1^2 - 1211172*k1^3 \
                   + 456863*k1^4 - 111708*k1^5 + 17462*k1^6 - 1608*k1^7 \
                   + 67*k1^8",
        },
        6 => Expansion {
            scale: (1, 7560),
            body: "-73316880 + 225502200*k1 - 284097336*k1^2 \
                   + 204504097*k1^3 - 91897169*k1^4 + 27466950*k1^5 \
                   - 5651016*k1^6 + 805518*k1^7 - 77646*k1^8 + 4655*k1^9 \
                   - 133*k1^10",
        },
        _ => return None,
    };
    Some(expansion)
}
