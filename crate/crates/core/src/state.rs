//! Bit-window state arithmetic shared by the teacher and learner chains.
//!
//! A state of an order-k chain is the window of the last k bits seen,
//! `[b(1), ..., b(k)]` with `b(1)` the oldest. States are encoded as
//! integers with `b(1)` in the most significant position, so the youngest
//! bit is the least significant one and advancing the window is a
//! shift-and-mask.

/// Mask selecting the low `order` bits of a state.
#[inline]
pub fn window_mask(order: u32) -> usize {
    (1usize << order) - 1
}

/// Number of states of an order-`order` chain.
#[inline]
pub fn num_states(order: u32) -> usize {
    1usize << order
}

/// Drop the oldest bit of `state` and append `bit` as the youngest.
#[inline]
pub fn shift(state: usize, bit: u8, order: u32) -> usize {
    ((state << 1) | bit as usize) & window_mask(order)
}

/// Pack a bit slice (oldest first) into a state integer.
pub fn state_from_bits(bits: &[u8]) -> usize {
    bits.iter().fold(0usize, |s, &b| (s << 1) | b as usize)
}

/// Unpack `state` into `order` bits, oldest first.
pub fn state_to_bits(state: usize, order: u32) -> Vec<u8> {
    (0..order).rev().map(|j| ((state >> j) & 1) as u8).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_drops_oldest_appends_youngest() {
        // 101 -> append 1 -> 011
        assert_eq!(shift(0b101, 1, 3), 0b011);
        assert_eq!(shift(0b101, 0, 3), 0b010);
        assert_eq!(shift(0b11, 1, 2), 0b11);
    }

    #[test]
    fn pack_unpack_round_trip() {
        for s in 0..32usize {
            assert_eq!(state_from_bits(&state_to_bits(s, 5)), s);
        }
    }

    #[test]
    fn youngest_bit_is_lsb() {
        let s = state_from_bits(&[1, 0, 1]);
        assert_eq!(s & 1, 1);
        assert_eq!(s, 0b101);
    }
}
