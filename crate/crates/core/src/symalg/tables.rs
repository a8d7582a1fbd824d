//! Monomial supports of the normalized general members, transcribed from the
//! published tables and kept in canonical order.

pub const TABLE_19: [&str; 53] = [
    "x^12",
    "x^10*y",
    "x^9*z",
    "x^9*t",
    "x^8*y^2",
    "x^8*w",
    "x^7*y*z",
    "x^7*y*t",
    "x^6*y^3",
    "x^6*y*w",
    "x^6*z^2",
    "x^6*z*t",
    "x^6*t^2",
    "x^5*y^2*z",
    "x^5*y^2*t",
    "x^5*z*w",
    "x^5*t*w",
    "x^4*y^4",
    "x^4*y^2*w",
    "x^4*y*z^2",
    "x^4*y*z*t",
    "x^4*y*t^2",
    "x^4*w^2",
    "x^3*y^3*z",
    "x^3*y^3*t",
    "x^3*y*z*w",
    "x^3*y*t*w",
    "x^3*z^2*t",
    "x^3*z*t^2",
    "x^2*y^2*z^2",
    "x^2*y^2*z*t",
    "x^2*y^2*t^2",
    "x^2*z^2*w",
    "x^2*z*t*w",
    "x^2*t^2*w",
    "x*y^2*z*w",
    "x*y^2*t*w",
    "x*y*z^2*t",
    "x*y*z*t^2",
    "x*z*w^2",
    "x*t*w^2",
    "y^4*w",
    "y^3*z^2",
    "y^3*z*t",
    "y^3*t^2",
    "y^2*w^2",
    "y*z^2*w",
    "y*z*t*w",
    "y*t^2*w",
    "z^3*t",
    "z^2*t^2",
    "z*t^3",
    "w^3",
];

pub const TABLE_28: [&str; 50] = [
    "x^15",
    "x^12*y",
    "x^12*z",
    "x^11*t",
    "x^10*w",
    "x^9*y^2",
    "x^9*y*z",
    "x^9*z^2",
    "x^8*y*t",
    "x^8*z*t",
    "x^7*y*w",
    "x^7*z*w",
    "x^7*t^2",
    "x^6*y^3",
    "x^6*y^2*z",
    "x^6*y*z^2",
    "x^6*z^3",
    "x^6*t*w",
    "x^5*y^2*t",
    "x^5*y*z*t",
    "x^5*z^2*t",
    "x^4*y^2*w",
    "x^4*y*z*w",
    "x^4*y*t^2",
    "x^4*z^2*w",
    "x^3*y^3*z",
    "x^3*y^2*z^2",
    "x^3*y*z^3",
    "x^3*y*t*w",
    "x^3*z*t*w",
    "x^2*y^3*t",
    "x^2*y^2*z*t",
    "x^2*y*z^2*t",
    "x^2*z^3*t",
    "x^2*t^2*w",
    "x*y^3*w",
    "x*y^2*z*w",
    "x*y^2*t^2",
    "x*y*z^2*w",
    "x*z^3*w",
    "y^4*z",
    "y^3*z^2",
    "y^2*z^3",
    "y^2*t*w",
    "y*z^4",
    "y*z*t*w",
    "y*t^3",
    "z^2*t*w",
    "z*t^3",
    "w^3",
];

pub const TABLE_39: [&str; 52] = [
    "x^18",
    "x^15*y",
    "x^14*z",
    "x^13*t",
    "x^12*y^2",
    "x^12*w",
    "x^11*y*z",
    "x^10*y*t",
    "x^10*z^2",
    "x^9*y^3",
    "x^9*y*w",
    "x^9*z*t",
    "x^8*y^2*z",
    "x^8*z*w",
    "x^8*t^2",
    "x^7*y^2*t",
    "x^7*y*z^2",
    "x^7*t*w",
    "x^6*y^4",
    "x^6*y^2*w",
    "x^6*y*z*t",
    "x^6*z^3",
    "x^5*y^3*z",
    "x^5*y*z*w",
    "x^5*z^2*t",
    "x^4*y^3*t",
    "x^4*y^2*z^2",
    "x^4*y*t*w",
    "x^4*z*t^2",
    "x^3*y^5",
    "x^3*y^3*w",
    "x^3*y^2*z*t",
    "x^3*y*z^3",
    "x^3*z*t*w",
    "x^2*y^4*z",
    "x^2*y^2*z*w",
    "x^2*y*z^2*t",
    "x^2*z^4",
    "x^2*t^2*w",
    "x*y^4*t",
    "x*y^3*z^2",
    "x*y^2*t*w",
    "x*z^3*t",
    "y^6",
    "y^4*w",
    "y^3*z*t",
    "y^2*z^3",
    "y*z*t*w",
    "y*t^3",
    "z^3*w",
    "z^2*t^2",
    "w^3",
];

pub const TABLE_49: [&str; 54] = [
    "x^21",
    "x^18*y",
    "x^16*z",
    "x^15*y^2",
    "x^15*t",
    "x^14*w",
    "x^13*y*z",
    "x^12*y^3",
    "x^12*y*t",
    "x^11*y*w",
    "x^11*z^2",
    "x^10*y^2*z",
    "x^10*z*t",
    "x^9*y^4",
    "x^9*y^2*t",
    "x^9*z*w",
    "x^9*t^2",
    "x^8*y^2*w",
    "x^8*y*z^2",
    "x^8*t*w",
    "x^7*y^3*z",
    "x^7*y*z*t",
    "x^6*y^3*t",
    "x^6*y*z*w",
    "x^6*y*t^2",
    "x^5*y^3*w",
    "x^5*y^2*z^2",
    "x^5*y*t*w",
    "x^5*z^2*t",
    "x^4*y^4*z",
    "x^4*y^2*z*t",
    "x^4*z^2*w",
    "x^4*z*t^2",
    "x^3*y^4*t",
    "x^3*y^2*z*w",
    "x^3*y^2*t^2",
    "x^3*z*t*w",
    "x^2*y^4*w",
    "x^2*y^3*z^2",
    "x^2*y^2*t*w",
    "x^2*y*z^2*t",
    "x^2*t^2*w",
    "x*y^3*z*t",
    "x*y*z^2*w",
    "x*y*z*t^2",
    "x*z^4",
    "y^5*t",
    "y^3*z*w",
    "y^3*t^2",
    "y^2*z^3",
    "y*z*t*w",
    "y*t^3",
    "z^3*t",
    "w^3",
];

pub const TABLE_59: [&str; 58] = [
    "x^24",
    "x^21*y",
    "x^18*y^2",
    "x^18*z",
    "x^17*t",
    "x^16*w",
    "x^15*y^3",
    "x^15*y*z",
    "x^14*y*t",
    "x^13*y*w",
    "x^12*y^4",
    "x^12*y^2*z",
    "x^12*z^2",
    "x^11*y^2*t",
    "x^11*z*t",
    "x^10*y^2*w",
    "x^10*z*w",
    "x^10*t^2",
    "x^9*y^5",
    "x^9*y^3*z",
    "x^9*y*z^2",
    "x^9*t*w",
    "x^8*y^3*t",
    "x^8*y*z*t",
    "x^7*y^3*w",
    "x^7*y*z*w",
    "x^6*y^4*z",
    "x^6*y^2*z^2",
    "x^6*y*t*w",
    "x^6*z^3",
    "x^5*y^4*t",
    "x^5*y^2*z*t",
    "x^5*z^2*t",
    "x^4*y^4*w",
    "x^4*y^2*z*w",
    "x^4*y^2*t^2",
    "x^4*z^2*w",
    "x^4*z*t^2",
    "x^3*y^5*z",
    "x^3*y^3*z^2",
    "x^3*y^2*t*w",
    "x^3*y*z^3",
    "x^3*z*t*w",
    "x^2*y^5*t",
    "x^2*y^3*z*t",
    "x^2*y*z^2*t",
    "x^2*t^2*w",
    "x*y^5*w",
    "x*y^3*z*w",
    "x*y*z^2*w",
    "y^6*z",
    "y^4*z^2",
    "y^3*t*w",
    "y^2*z^3",
    "y*z*t*w",
    "y*t^3",
    "z^4",
    "w^3",
];

pub const TABLE_66: [&str; 49] = [
    "x^27",
    "x^22*y",
    "x^21*z",
    "x^20*t",
    "x^18*w",
    "x^17*y^2",
    "x^16*y*z",
    "x^15*y*t",
    "x^15*z^2",
    "x^14*z*t",
    "x^13*y*w",
    "x^13*t^2",
    "x^12*y^3",
    "x^12*z*w",
    "x^11*y^2*z",
    "x^11*t*w",
    "x^10*y^2*t",
    "x^10*y*z^2",
    "x^9*y*z*t",
    "x^9*z^3",
    "x^8*y^2*w",
    "x^8*y*t^2",
    "x^8*z^2*t",
    "x^7*y*z*w",
    "x^7*z*t^2",
    "x^6*y^3*z",
    "x^6*y*t*w",
    "x^6*z^2*w",
    "x^5*y^2*z^2",
    "x^5*z*t*w",
    "x^4*y^2*z*t",
    "x^4*y*z^3",
    "x^4*t^2*w",
    "x^3*y^3*w",
    "x^3*y^2*t^2",
    "x^3*y*z^2*t",
    "x^3*z^4",
    "x^2*y^2*z*w",
    "x^2*y*z*t^2",
    "x^2*z^3*t",
    "x*y^2*t*w",
    "x*y*z^2*w",
    "x*z^2*t^2",
    "y^4*t",
    "y^3*z^2",
    "y*z*t*w",
    "z^3*w",
    "z*t^3",
    "w^3",
];

pub const TABLE_84: [&str; 48] = [
    "x^36",
    "x^29*y",
    "x^28*z",
    "x^27*t",
    "x^24*w",
    "x^22*y^2",
    "x^21*y*z",
    "x^20*y*t",
    "x^20*z^2",
    "x^19*z*t",
    "x^18*t^2",
    "x^17*y*w",
    "x^16*z*w",
    "x^15*y^3",
    "x^15*t*w",
    "x^14*y^2*z",
    "x^13*y^2*t",
    "x^13*y*z^2",
    "x^12*y*z*t",
    "x^12*z^3",
    "x^11*y*t^2",
    "x^11*z^2*t",
    "x^10*y^2*w",
    "x^10*z*t^2",
    "x^9*y*z*w",
    "x^8*y*t*w",
    "x^8*z^2*w",
    "x^7*z*t*w",
    "x^6*y^3*t",
    "x^6*y^2*z^2",
    "x^6*t^2*w",
    "x^5*y^2*z*t",
    "x^5*y*z^3",
    "x^4*y^2*t^2",
    "x^4*y*z^2*t",
    "x^4*z^4",
    "x^3*y^3*w",
    "x^3*y*z*t^2",
    "x^3*z^3*t",
    "x^2*y^2*z*w",
    "x^2*z^2*t^2",
    "x*y^2*t*w",
    "x*y*z^2*w",
    "y^4*z",
    "y*z*t*w",
    "z^3*w",
    "t^4",
    "w^3",
];

/// The table for a family with a builtin plan.
pub fn golden_table(number: u32) -> Option<&'static [&'static str]> {
    Some(match number {
        19 => &TABLE_19,
        28 => &TABLE_28,
        39 => &TABLE_39,
        49 => &TABLE_49,
        59 => &TABLE_59,
        66 => &TABLE_66,
        84 => &TABLE_84,
        _ => return None,
    })
}
