#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordept/bitvec.hpp"

namespace ordept {

/// Syndrome of an n-bit word: an (n-k)-bit value, bit r = parity row r.
struct Syndrome {
    uint64_t bits = 0;
    bool zero() const { return bits == 0; }
    friend bool operator==(Syndrome, Syndrome) = default;
};

/// A binary linear (n,k) block code. Immutable after construction and safe to
/// share across threads. The parity-check matrix is stored both as packed
/// rows and as per-column (n-k)-bit words so syndromes reduce to XORs of
/// column words.
struct CodeSpec {
    int n = 0;
    int k = 0;
    std::vector<BitVec> h_rows;    // n-k rows of length n
    std::vector<uint64_t> h_cols;  // n column words, bit r = row r
    std::vector<BitVec> gen_rows;  // k generator rows; empty = no encoder
    std::string name;

    int r() const { return n - k; }
    bool has_generator() const { return !gen_rows.empty(); }
    uint64_t syndrome_mask() const {
        return r() >= 64 ? ~uint64_t{0} : (uint64_t{1} << r()) - 1;
    }
};

/// Assembles a CodeSpec and checks its invariants: dimensions, rank(H) = n-k
/// over GF(2), G*H^T = 0 when a generator is supplied. Parity widths above 64
/// bits are rejected (syndromes are packed into one machine word).
CodeSpec make_code(int n, int k, std::vector<BitVec> h_rows,
                   std::vector<BitVec> gen_rows, std::string name);

/// w * H^T, folded as the XOR of column words over the set bits of w.
Syndrome syndrome(const BitVec& w, const CodeSpec& code);

bool is_codeword(const BitVec& w, const CodeSpec& code);

/// XOR of generator rows selected by the info bits. Requires a generator.
BitVec encode(const BitVec& info, const CodeSpec& code);

/// Rank over GF(2); consumes its argument.
int gf2_rank(std::vector<BitVec> rows);

/// The (7,4) Hamming code with column j of H equal to the binary value j+1
/// (LSB in row 0) and info positions {2,4,5,6}.
CodeSpec hamming_7_4();

/// Text format: `n k`, then n-k rows of H as 0/1 strings, then an optional
/// `G` line followed by k generator rows. `#` starts a comment line.
CodeSpec load_code(const std::string& path);
void save_code(const CodeSpec& code, const std::string& path);

/// Resolves a built-in name (bch-32-21, bch-256-239, polar-128-116,
/// hamming-7-4) or falls back to loading the argument as a file path.
CodeSpec resolve_code(const std::string& name_or_path);

}  // namespace ordept
