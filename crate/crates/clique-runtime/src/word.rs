/// Bits needed to represent values in `[0, max]`.
pub fn bits_for(max: u64) -> u32 {
    64 - max.leading_zeros().max(0)
}

/// Number of width-`w` words covering `bits` bits (at least one for an
/// announced empty payload).
pub fn words_for_bits(bits: u32, w: u32) -> u64 {
    if bits == 0 {
        1
    } else {
        ((bits as u64) + w as u64 - 1) / w as u64
    }
}

/// One bounded-width payload: `bits <= W` enforced by the runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Word {
    pub value: u64,
    pub bits: u32,
}

impl Word {
    pub fn new(value: u64, bits: u32) -> Word {
        debug_assert!(bits == 64 || value < (1u64 << bits));
        Word { value, bits }
    }

    /// Packs `(value, bits)` fields into width-`w` words, in field order.
    /// Fields wider than `w` are rejected by construction at call sites; the
    /// packer splits the concatenated bit stream at word boundaries.
    pub fn pack(fields: &[(u64, u32)], w: u32) -> Vec<Word> {
        let total: u32 = fields.iter().map(|&(_, b)| b).sum();
        let mut stream: Vec<bool> = Vec::with_capacity(total as usize);
        for &(v, b) in fields {
            debug_assert!(b == 64 || v < (1u64 << b), "field {v} exceeds {b} bits");
            for i in (0..b).rev() {
                stream.push((v >> i) & 1 == 1);
            }
        }
        if stream.is_empty() {
            return vec![Word::new(0, 0)];
        }
        stream
            .chunks(w as usize)
            .map(|chunk| {
                let mut v = 0u64;
                for &bit in chunk {
                    v = (v << 1) | bit as u64;
                }
                Word::new(v, chunk.len() as u32)
            })
            .collect()
    }

    /// Word count for a field list under width `w`, without materializing.
    pub fn count(fields: &[(u64, u32)], w: u32) -> u64 {
        words_for_bits(fields.iter().map(|&(_, b)| b).sum(), w)
    }
}

/// One addressed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Message {
    pub src: u32,
    pub dst: u32,
    pub body: Word,
}

impl Message {
    pub fn new(src: u32, dst: u32, body: Word) -> Message {
        Message { src, dst, body }
    }
}
