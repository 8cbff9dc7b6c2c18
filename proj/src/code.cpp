#include "ordept/code.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "ordept/bch.hpp"
#include "ordept/polar.hpp"

namespace ordept {

int gf2_rank(std::vector<BitVec> rows) {
    if (rows.empty()) return 0;
    int n = rows[0].size();
    int rank = 0;
    for (int col = 0; col < n && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < int(rows.size()); ++i) {
            if (rows[i].get(col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < int(rows.size()); ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

CodeSpec make_code(int n, int k, std::vector<BitVec> h_rows,
                   std::vector<BitVec> gen_rows, std::string name) {
    if (n <= 0 || k <= 0 || k >= n)
        throw std::invalid_argument("make_code: need 0 < k < n");
    int r = n - k;
    if (r > 64)
        throw std::invalid_argument(
            "make_code: parity width n-k > 64 is not supported");
    if (int(h_rows.size()) != r)
        throw std::invalid_argument("make_code: H must have n-k rows");
    for (const BitVec& row : h_rows)
        if (row.size() != n)
            throw std::invalid_argument("make_code: H row length != n");
    if (gf2_rank(h_rows) != r)
        throw std::invalid_argument("make_code: H is rank deficient");

    CodeSpec code;
    code.n = n;
    code.k = k;
    code.h_rows = std::move(h_rows);
    code.name = std::move(name);
    code.h_cols.assign(n, 0);
    for (int i = 0; i < r; ++i)
        code.h_rows[i].for_each_set(
            [&](int j) { code.h_cols[j] |= uint64_t{1} << i; });

    if (!gen_rows.empty()) {
        if (int(gen_rows.size()) != k)
            throw std::invalid_argument("make_code: G must have k rows");
        for (const BitVec& row : gen_rows) {
            if (row.size() != n)
                throw std::invalid_argument("make_code: G row length != n");
        }
        if (gf2_rank(gen_rows) != k)
            throw std::invalid_argument("make_code: G is rank deficient");
        code.gen_rows = std::move(gen_rows);
        for (const BitVec& row : code.gen_rows)
            if (!syndrome(row, code).zero())
                throw std::invalid_argument("make_code: G*H^T != 0");
    }
    return code;
}

Syndrome syndrome(const BitVec& w, const CodeSpec& code) {
    if (w.size() != code.n)
        throw std::invalid_argument("syndrome: word length != n");
    uint64_t s = 0;
    w.for_each_set([&](int j) { s ^= code.h_cols[j]; });
    return Syndrome{s};
}

bool is_codeword(const BitVec& w, const CodeSpec& code) {
    return syndrome(w, code).zero();
}

BitVec encode(const BitVec& info, const CodeSpec& code) {
    if (!code.has_generator())
        throw std::invalid_argument("encode: code has no generator");
    if (info.size() != code.k)
        throw std::invalid_argument("encode: info length != k");
    BitVec c(code.n);
    info.for_each_set([&](int i) { c ^= code.gen_rows[i]; });
    return c;
}

CodeSpec hamming_7_4() {
    std::vector<BitVec> h;
    h.push_back(BitVec::from_string("1010101"));
    h.push_back(BitVec::from_string("0110011"));
    h.push_back(BitVec::from_string("0001111"));
    std::vector<BitVec> g;
    g.push_back(BitVec::from_string("1110000"));
    g.push_back(BitVec::from_string("1001100"));
    g.push_back(BitVec::from_string("0101010"));
    g.push_back(BitVec::from_string("1101001"));
    return make_code(7, 4, std::move(h), std::move(g), "hamming-7-4");
}

namespace {

// Reads the next non-comment, non-blank line.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Drops rows that are linear combinations of earlier ones.
std::vector<BitVec> independent_rows(const std::vector<BitVec>& rows) {
    std::vector<BitVec> kept, reduced;
    for (const BitVec& row : rows) {
        std::vector<BitVec> trial = reduced;
        trial.push_back(row);
        if (gf2_rank(std::move(trial)) > int(reduced.size())) {
            kept.push_back(row);
            reduced.push_back(row);
        }
    }
    return kept;
}

}  // namespace

CodeSpec load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_code: cannot open " + path);
    std::string line;
    if (!next_line(in, line))
        throw std::runtime_error("load_code: missing header line");
    std::istringstream header(line);
    int n = 0, k = 0;
    if (!(header >> n >> k) || n <= 0 || k <= 0 || k >= n)
        throw std::runtime_error("load_code: bad header, expected `n k`");

    std::vector<BitVec> h_rows;
    for (int i = 0; i < n - k; ++i) {
        if (!next_line(in, line))
            throw std::runtime_error("load_code: truncated H section");
        std::string row = trim(line);
        if (int(row.size()) != n)
            throw std::runtime_error("load_code: H row with wrong column count");
        h_rows.push_back(BitVec::from_string(row));
    }

    int rank = gf2_rank(h_rows);
    if (rank < n - k) {
        std::cerr << "load_code: warning: H rank " << rank << " < " << (n - k)
                  << ", dropping dependent rows (effective n-k = " << rank
                  << ")\n";
        h_rows = independent_rows(h_rows);
        k = n - rank;
    }

    std::vector<BitVec> gen_rows;
    if (next_line(in, line)) {
        if (trim(line) != "G")
            throw std::runtime_error("load_code: expected `G` section marker");
        for (int i = 0; i < k; ++i) {
            if (!next_line(in, line))
                throw std::runtime_error("load_code: truncated G section");
            std::string row = trim(line);
            if (int(row.size()) != n)
                throw std::runtime_error(
                    "load_code: G row with wrong column count");
            gen_rows.push_back(BitVec::from_string(row));
        }
    }
    return make_code(n, k, std::move(h_rows), std::move(gen_rows), path);
}

void save_code(const CodeSpec& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_code: cannot open " + path);
    out << code.n << ' ' << code.k << '\n';
    for (const BitVec& row : code.h_rows) out << row.to_string() << '\n';
    if (code.has_generator()) {
        out << "G\n";
        for (const BitVec& row : code.gen_rows) out << row.to_string() << '\n';
    }
    if (!out) throw std::runtime_error("save_code: write failed for " + path);
}

CodeSpec resolve_code(const std::string& name_or_path) {
    if (name_or_path == "hamming-7-4") return hamming_7_4();
    if (name_or_path == "bch-32-21") return build_bch_code(5, 2, true);
    if (name_or_path == "bch-256-239") return build_bch_code(8, 2, true);
    if (name_or_path == "polar-128-116") return build_polar_code(128, 116);
    return load_code(name_or_path);
}

}  // namespace ordept
