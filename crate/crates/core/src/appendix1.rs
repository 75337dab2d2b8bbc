//! Printed members of the fundamental sets, as coefficient rows over
//! `σ_1..σ_8`. Kept verbatim (including entries that fail the length
//! test) so that [`crate::weyl::reconcile_appendix1`] can compare them with
//! the computed sets.

const SET_1: [[i64; 8]; 3] = [
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
];
const SET_2: [[i64; 8]; 7] = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [2, 0, 0, 0, 0, 0, 1, -1],
    [1, 0, 1, 0, 0, 0, 0, -1],
    [1, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 1, 0, 0, 1, 0, -2],
    [0, 0, 0, 0, 1, 0, 1, -2],
    [0, 1, 0, 1, 0, 0, 0, -2],
];
const SET_3: [[i64; 8]; 15] = [
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 1, 0, -1],
    [3, 0, 0, 0, 0, 1, 0, -2],
    [0, 0, 0, 1, 0, 0, 2, -2],
    [1, 0, 1, 0, 0, 1, 0, -2],
    [2, 0, 1, 0, 0, 0, 1, -2],
    [1, 0, 0, 0, 1, 0, 1, -2],
    [2, 0, 0, 0, 0, 1, 1, -2],
    [1, 1, 0, 1, 0, 0, 0, -2],
    [1, 0, 0, 2, 0, 0, 0, -3],
    [0, 2, 0, 0, 1, 0, 0, -3],
    [0, 0, 0, 0, 2, 0, 0, -3],
    [0, 1, 0, 1, 0, 1, 0, -3],
    [0, 0, 1, 0, 1, 0, 1, -3],
];
const SET_4: [[i64; 8]; 27] = [
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 1, 0, -1],
    [1, 0, 0, 1, 0, 0, 2, -2],
    [0, 1, 1, 0, 0, 1, 0, -2],
    [0, 1, 0, 0, 1, 0, 1, -2],
    [0, 0, 1, 0, 0, 0, 3, -2],
    [0, 2, 0, 1, 0, 0, 0, -2],
    [4, 0, 0, 0, 1, 0, 0, -3],
    [2, 0, 1, 0, 0, 1, 1, -3],
    [2, 0, 0, 2, 0, 0, 0, -3],
    [1, 2, 0, 0, 1, 0, 0, -3],
    [1, 0, 0, 0, 2, 0, 0, -3],
    [0, 3, 0, 0, 0, 1, 0, -3],
    [3, 0, 1, 0, 0, 1, 0, -3],
    [0, 0, 1, 1, 0, 0, 2, -3],
    [2, 0, 0, 0, 1, 0, 2, -3],
    [1, 1, 0, 1, 0, 1, 0, -3],
    [3, 0, 0, 0, 0, 2, 0, -3],
    [2, 1, 0, 1, 0, 0, 1, -3],
    [1, 0, 1, 0, 1, 0, 1, -3],
    [0, 1, 0, 1, 1, 0, 1, -4],
    [0, 0, 0, 3, 0, 0, 0, -4],
    [0, 0, 1, 0, 2, 0, 0, -4],
    [1, 0, 0, 2, 0, 1, 0, -4],
    [0, 2, 0, 0, 1, 1, 0, -4],
    [0, 0, 0, 0, 3, 0, 0, -5],
];
const SET_5: [[i64; 8]; 35] = [
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, -1],
    [0, 1, 0, 1, 0, 0, 2, -2],
    [0, 0, 2, 0, 0, 1, 0, -2],
    [0, 1, 0, 0, 0, 0, 4, -2],
    [0, 0, 1, 0, 1, 0, 1, -2],
    [1, 0, 1, 0, 0, 0, 3, -2],
    [5, 0, 0, 1, 0, 0, 0, -3],
    [0, 0, 2, 0, 0, 0, 3, -3],
    [2, 0, 0, 1, 0, 0, 3, -3],
    [0, 3, 0, 0, 1, 0, 0, -3],
    [0, 1, 0, 0, 2, 0, 0, -3],
    [1, 3, 0, 0, 0, 1, 0, -3],
    [1, 0, 1, 1, 0, 0, 2, -3],
    [0, 2, 0, 1, 0, 1, 0, -3],
    [0, 4, 0, 0, 0, 0, 1, -3],
    [0, 1, 1, 0, 1, 0, 1, -3],
    [0, 3, 0, 0, 0, 2, 0, -4],
    [3, 0, 1, 0, 0, 2, 0, -4],
    [3, 0, 0, 2, 0, 0, 1, -4],
    [2, 2, 0, 0, 1, 0, 1, -4],
    [1, 1, 0, 1, 1, 0, 1, -4],
    [4, 0, 1, 0, 1, 0, 0, -4],
    [2, 1, 0, 1, 0, 1, 1, -4],
    [1, 0, 1, 0, 2, 0, 0, -4],
    [3, 1, 0, 1, 0, 1, 0, -4],
    [0, 1, 0, 2, 0, 0, 2, -4],
    [2, 0, 1, 0, 1, 0, 2, -4],
    [2, 0, 0, 2, 0, 1, 0, -4],
    [1, 2, 0, 0, 1, 1, 0, -4],
    [0, 0, 0, 3, 0, 1, 0, -5],
    [1, 0, 0, 2, 1, 0, 1, -5],
    [0, 2, 0, 0, 2, 0, 1, -5],
    [0, 1, 0, 1, 2, 0, 0, -5],
    [0, 0, 1, 0, 3, 0, 0, -6],
];
const SET_6: [[i64; 8]; 17] = [
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 3, -1],
    [0, 1, 0, 0, 0, 0, 2, -1],
    [1, 0, 1, 0, 0, 0, 2, -2],
    [0, 2, 0, 0, 0, 1, 0, -2],
    [1, 2, 0, 0, 0, 0, 1, -2],
    [0, 1, 0, 1, 0, 0, 1, -2],
    [0, 3, 0, 0, 0, 0, 0, -2],
    [3, 0, 1, 0, 0, 0, 0, -2],
    [0, 0, 1, 0, 1, 0, 0, -2],
    [2, 1, 0, 0, 1, 0, 0, -3],
    [1, 0, 0, 1, 1, 0, 0, -3],
    [2, 0, 0, 1, 0, 1, 0, -3],
    [0, 0, 0, 2, 0, 0, 1, -3],
    [1, 1, 0, 0, 1, 0, 1, -3],
    [0, 1, 0, 0, 2, 0, 0, -4],
];
const SET_7: [[i64; 8]; 5] = [
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, -1],
    [1, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 1, 0, 0, 0, -1],
    [1, 0, 0, 0, 1, 0, 0, -2],
];
const SET_8: [[i64; 8]; 11] = [
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, -1],
    [3, 0, 0, 0, 0, 0, 0, -1],
    [0, 2, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 1, 0, 0, -1],
    [1, 0, 0, 0, 0, 0, 2, -1],
    [1, 1, 0, 0, 0, 1, 0, -2],
    [1, 0, 0, 1, 0, 0, 1, -2],
    [2, 0, 0, 1, 0, 0, 0, -2],
    [0, 1, 0, 0, 1, 0, 0, -2],
    [0, 0, 0, 1, 1, 0, 0, -3],
];

/// The worked sum-set example for `λ_1 + λ_7`.
pub const SET_1_PLUS_7: [[i64; 8]; 13] = [
    [1, 0, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 1, -1],
    [2, 1, 0, 0, 0, 0, 0, -1],
    [1, 0, 0, 1, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 1, 1, -1],
    [2, 0, 0, 0, 1, 0, 0, -2],
    [0, 1, 1, 0, 0, 0, 1, -2],
    [1, 1, 1, 0, 0, 0, 0, -2],
    [0, 0, 1, 1, 0, 0, 0, -2],
    [0, 1, 0, 0, 0, 1, 1, -2],
    [0, 0, 0, 1, 0, 1, 0, -2],
    [1, 0, 1, 0, 1, 0, 0, -3],
    [1, 0, 0, 0, 1, 1, 0, -3],
];

/// Printed entries for `Σ(λ_i)`, `i` in `1..=8`.
pub fn printed_set(i: usize) -> Option<&'static [[i64; 8]]> {
    Some(match i {
        1 => &SET_1,
        2 => &SET_2,
        3 => &SET_3,
        4 => &SET_4,
        5 => &SET_5,
        6 => &SET_6,
        7 => &SET_7,
        8 => &SET_8,
        _ => return None,
    })
}
