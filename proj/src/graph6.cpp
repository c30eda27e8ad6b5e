#include "trispec/graph6.hpp"

namespace trispec {

std::string graph6_encode(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph graph6_decode(const std::string& line) {
    std::string_view s(line);
    size_t base = 0;
    const std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
        base = header.size();
    }
    if (s.empty()) throw graph6_error("graph6: empty input", base);

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw graph6_error("graph6: truncated size prefix", base + s.size());
    };
    auto byte6 = [&](size_t at) -> long long {
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) throw graph6_error("graph6: character out of range", base + at);
        return c - 63;
    };

    long long n;
    if (byte6(0) < 63) {
        n = byte6(0);
        pos = 1;
    } else {
        need(2);
        if (byte6(1) < 63) {
            need(4);
            n = (byte6(1) << 12) | (byte6(2) << 6) | byte6(3);
            pos = 4;
            if (n < 63) throw graph6_error("graph6: non-minimal size prefix", base);
        } else {
            need(8);
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte6(i);
            pos = 8;
            if (n < 258048) throw graph6_error("graph6: non-minimal size prefix", base);
        }
    }

    long long pairs = n * (n - 1) / 2;
    size_t want = static_cast<size_t>((pairs + 5) / 6);
    if (s.size() - pos != want)
        throw graph6_error("graph6: body length mismatch (want " + std::to_string(want) +
                               " data bytes, got " + std::to_string(s.size() - pos) + ")",
                           base + pos);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int i = 0, j = 1;
    for (size_t k = pos; k < s.size(); ++k) {
        long long v6 = byte6(k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = static_cast<int>((v6 >> b) & 1);
            if (bit >= pairs) {
                if (on) throw graph6_error("graph6: nonzero padding bits", base + k);
                continue;
            }
            if (on) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

}  // namespace trispec
