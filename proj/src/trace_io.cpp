#include "awrpsim/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace awrpsim {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_interval(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string format_skew(double s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace

std::string_view format_name(TraceFormat format) noexcept {
    return format == TraceFormat::Plain ? "plain" : "labeled";
}

std::optional<TraceFormat> parse_trace_format(std::string_view name) noexcept {
    const auto l = lower(name);
    if (l == "plain") return TraceFormat::Plain;
    if (l == "labeled") return TraceFormat::Labeled;
    return std::nullopt;
}

std::optional<std::uint64_t> parse_address(std::string_view token) noexcept {
    int base = 10;
    if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
        token.remove_prefix(2);
        base = 16;
    }
    if (token.empty()) return std::nullopt;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

Trace parse_trace(std::istream &in, TraceFormat format, unsigned block_size_log2, std::string name,
                  ParseStats *stats) {
    std::vector<BlockId> blocks;
    ParseStats local;
    std::string line;
    while (std::getline(in, line)) {
        ++local.lines;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            ++local.skipped;
            continue;
        }
        const auto tokens = split_ws(body);
        std::string_view address_token;
        if (format == TraceFormat::Plain) {
            if (tokens.size() != 1) {
                throw ParseError(local.lines, std::string(body), "expected a single address");
            }
            address_token = tokens[0];
        } else {
            if (tokens.size() != 2) {
                throw ParseError(local.lines, std::string(body), "expected '<label> <address>'");
            }
            address_token = tokens[1];
        }
        const auto address = parse_address(address_token);
        if (!address) {
            throw ParseError(local.lines, std::string(body), "invalid address");
        }
        blocks.push_back(block_of(*address, block_size_log2));
    }
    if (stats) *stats = local;
    return Trace(std::move(name), std::move(blocks));
}

Trace parse_trace(std::string_view text, TraceFormat format, unsigned block_size_log2,
                  std::string name, ParseStats *stats) {
    std::istringstream in{std::string(text)};
    return parse_trace(in, format, block_size_log2, std::move(name), stats);
}

Trace load_trace(const std::filesystem::path &path, TraceFormat format, unsigned block_size_log2) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open trace file '" + path.string() + "'");
    }
    return parse_trace(in, format, block_size_log2, path.stem().string());
}

void write_plain(std::ostream &out, const Trace &trace, std::string_view header) {
    if (!header.empty()) out << "# " << header << '\n';
    for (const BlockId b : trace.blocks()) out << b << '\n';
}

void validate(const WorkloadSpec &spec) {
    std::visit(
        [](const auto &w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, LoopWorkload>) {
                if (w.loop_len == 0) throw ConfigError("loop length must be at least 1");
            } else {
                if (w.universe == 0) throw ConfigError("universe must be at least 1");
            }
            if constexpr (std::is_same_v<T, ZipfWorkload>) {
                if (!(w.s >= 0.0) || !std::isfinite(w.s)) {
                    throw ConfigError("zipf skew must be a finite value >= 0");
                }
            }
        },
        spec);
}

std::string describe(const WorkloadSpec &spec) {
    return std::visit(
        [](const auto &w) -> std::string {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ScanWorkload>) {
                return "scan n=" + std::to_string(w.n) + " universe=" + std::to_string(w.universe);
            } else if constexpr (std::is_same_v<T, LoopWorkload>) {
                return "loop n=" + std::to_string(w.n) + " loop_len=" + std::to_string(w.loop_len);
            } else {
                return "zipf n=" + std::to_string(w.n) + " universe=" + std::to_string(w.universe) +
                       " s=" + format_skew(w.s) + " seed=" + std::to_string(w.seed) +
                       " prng=" + std::string(kPrngName);
            }
        },
        spec);
}

Trace generate(const WorkloadSpec &spec) {
    validate(spec);
    std::vector<BlockId> blocks;
    std::visit(
        [&blocks](const auto &w) {
            using T = std::decay_t<decltype(w)>;
            blocks.reserve(w.n);
            if constexpr (std::is_same_v<T, ScanWorkload>) {
                for (std::uint64_t i = 0; i < w.n; ++i) blocks.push_back(i % w.universe);
            } else if constexpr (std::is_same_v<T, LoopWorkload>) {
                for (std::uint64_t i = 0; i < w.n; ++i) blocks.push_back(i % w.loop_len);
            } else {
                // Inverse-CDF sampling over the normalized rank weights.
                std::vector<double> cdf(w.universe);
                double total = 0.0;
                for (std::uint64_t k = 0; k < w.universe; ++k) {
                    total += std::pow(static_cast<double>(k + 1), -w.s);
                    cdf[k] = total;
                }
                std::mt19937_64 rng(w.seed);
                for (std::uint64_t i = 0; i < w.n; ++i) {
                    const double u = unit_interval(rng) * total;
                    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
                    const auto k = std::min<std::uint64_t>(static_cast<std::uint64_t>(it - cdf.begin()),
                                                           w.universe - 1);
                    blocks.push_back(k);
                }
            }
        },
        spec);
    return Trace(describe(spec), std::move(blocks));
}

} // namespace awrpsim
