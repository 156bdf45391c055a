#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dold/doldcore.hpp"
#include "dold/literals.hpp"
#include "dold/numtheory.hpp"
#include "dold/parallel.hpp"
#include "dold/sequence.hpp"

// Exhaustive enumeration of the realizable root spectra on a surface of
// fixed genus. A spectrum (r_k) with sum r_k phi(k) = 2g groups into an outer
// partition of 2g with part n taken p_n = sum_{phi(k) = n} r_k times; each
// p_n is then distributed over the labelled slots k in phi^{-1}(n).
namespace dold::enumeration {

namespace nt = dold::numtheory;

namespace detail {

inline void partitions_rec(Index remaining, std::size_t top, std::span<const Index> parts,
                           std::vector<Index>& current,
                           const std::function<void(const std::vector<Index>&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (std::size_t i = 0; i <= top && i < parts.size(); ++i) {
        if (parts[i] > remaining) break;
        current.push_back(parts[i]);
        partitions_rec(remaining - parts[i], i, parts, current, visit);
        current.pop_back();
    }
}

}  // namespace detail

/// Calls visit on every multiset of allowed parts summing to total. Each
/// multiset is passed as a non-increasing list; lists arrive in ascending
/// lexicographic order. total == 0 yields one empty partition.
inline void for_each_partition(Index total, std::vector<Index> allowed_parts,
                               const std::function<void(const std::vector<Index>&)>& visit) {
    std::sort(allowed_parts.begin(), allowed_parts.end());
    if (std::adjacent_find(allowed_parts.begin(), allowed_parts.end()) != allowed_parts.end())
        throw DomainError("partitions: allowed parts must be distinct");
    if (!allowed_parts.empty() && allowed_parts.front() == 0)
        throw DomainError("partitions: allowed parts must be positive");
    std::vector<Index> current;
    detail::partitions_rec(total, allowed_parts.size(), allowed_parts, current, visit);
}

inline std::vector<std::vector<Index>> partitions(Index total, std::vector<Index> allowed_parts) {
    std::vector<std::vector<Index>> out;
    for_each_partition(total, std::move(allowed_parts), [&](const std::vector<Index>& p) { out.push_back(p); });
    return out;
}

/// Totient values n <= 2g with a nonempty preimage, with their preimages.
struct PartUniverse {
    std::vector<Index> parts;
    std::vector<std::vector<Index>> preimages;  // parallel to parts

    explicit PartUniverse(Index genus) {
        for (Index n = 1; n <= 2 * genus; ++n) {
            auto pre = nt::inverse_totient(n);
            if (pre.empty()) continue;
            parts.push_back(n);
            preimages.push_back(std::move(pre));
        }
    }

    const std::vector<Index>& preimage(Index n) const {
        return preimages[std::lower_bound(parts.begin(), parts.end(), n) - parts.begin()];
    }
};

namespace detail {

struct Group {
    const std::vector<Index>* slots;
    Index count;
};

// Distributes group[gi].count over its slots, largest share to the first slot
// first, then recurses into the next group.
inline void distribute(const std::vector<Group>& groups, std::size_t gi, std::size_t si, Index left,
                       std::vector<std::pair<Index, Index>>& chosen,
                       const std::function<void(const RootSpectrum&)>& emit) {
    if (gi == groups.size()) {
        RootSpectrum r;
        for (const auto& [k, m] : chosen) r.set(k, Integer(m));
        emit(r);
        return;
    }
    const auto& slots = *groups[gi].slots;
    const Index k = slots[si];
    const bool parity = k == 1 || k == 2;
    const bool last = si + 1 == slots.size();
    auto place = [&](Index v) {
        if (v) chosen.emplace_back(k, v);
        if (last)
            distribute(groups, gi + 1, 0, gi + 1 < groups.size() ? groups[gi + 1].count : 0, chosen, emit);
        else
            distribute(groups, gi, si + 1, left - v, chosen, emit);
        if (v) chosen.pop_back();
    };
    if (last) {
        if (!parity || left % 2 == 0) place(left);
        return;
    }
    for (Index v = left + 1; v-- > 0;) {
        if (parity && v % 2 != 0) continue;
        place(v);
    }
}

}  // namespace detail

/// Realizable spectra of one outer partition, in slot-lexicographic order
/// (earlier slots take larger shares first; groups by ascending part n).
inline void for_each_spectrum_of_partition(const PartUniverse& universe, const std::vector<Index>& partition,
                                           const std::function<void(const RootSpectrum&)>& emit) {
    std::vector<detail::Group> groups;
    for (auto it = partition.rbegin(); it != partition.rend();) {
        const Index n = *it;
        Index count = 0;
        for (; it != partition.rend() && *it == n; ++it) ++count;
        groups.push_back({&universe.preimage(n), count});
    }
    std::vector<std::pair<Index, Index>> chosen;
    if (groups.empty()) {
        emit(RootSpectrum{});
        return;
    }
    detail::distribute(groups, 0, 0, groups[0].count, chosen, emit);
}

inline std::vector<std::vector<Index>> outer_partitions(Index genus, const PartUniverse& universe) {
    return partitions(2 * genus, universe.parts);
}

/// Streams every realizable spectrum of total size 2g exactly once, in the
/// deterministic enumeration order.
inline void for_each_spectrum(Index genus, const std::function<void(const RootSpectrum&)>& emit) {
    if (genus == 0) throw DomainError("enumerate_spectra: genus must be positive");
    const PartUniverse universe(genus);
    for_each_partition(2 * genus, universe.parts,
                       [&](const std::vector<Index>& p) { for_each_spectrum_of_partition(universe, p, emit); });
}

/// Work split by outer partition; results are concatenated in partition
/// order, so the output does not depend on the worker count.
template <typename Fn>
auto map_partitions(Index genus, unsigned workers, Fn&& per_partition) {
    if (genus == 0) throw DomainError("genus must be positive");
    const PartUniverse universe(genus);
    const auto parts = outer_partitions(genus, universe);
    return parallel_map_ordered(parts.size(), workers,
                                [&](std::size_t i) { return per_partition(universe, parts[i]); });
}

inline std::vector<RootSpectrum> enumerate_spectra(Index genus, unsigned workers = 1) {
    auto chunks = map_partitions(genus, workers, [](const PartUniverse& u, const std::vector<Index>& p) {
        std::vector<RootSpectrum> out;
        for_each_spectrum_of_partition(u, p, [&](const RootSpectrum& r) { out.push_back(r); });
        return out;
    });
    std::vector<RootSpectrum> all;
    for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(all));
    return all;
}

struct GenusCatalogRecord {
    Index genus = 0;
    RootSpectrum spectrum;
    DoldSequence dold;
    APSet ap;
    APSet mper;

    friend bool operator==(const GenusCatalogRecord&, const GenusCatalogRecord&) = default;
};

inline GenusCatalogRecord make_record(Index genus, const RootSpectrum& r) {
    GenusCatalogRecord rec{genus, r, core::spectrum_to_dold(r), {}, {}};
    rec.ap = core::algebraic_periods(rec.dold);
    rec.mper = rec.ap.odd_part();
    return rec;
}

inline void for_each_record(Index genus, const std::function<void(const GenusCatalogRecord&)>& emit) {
    for_each_spectrum(genus, [&](const RootSpectrum& r) { emit(make_record(genus, r)); });
}

inline std::vector<GenusCatalogRecord> enumerate_catalog(Index genus, unsigned workers = 1) {
    auto chunks = map_partitions(genus, workers, [genus](const PartUniverse& u, const std::vector<Index>& p) {
        std::vector<GenusCatalogRecord> out;
        for_each_spectrum_of_partition(u, p, [&](const RootSpectrum& r) { out.push_back(make_record(genus, r)); });
        return out;
    });
    std::vector<GenusCatalogRecord> all;
    for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(all));
    return all;
}

struct GenusSummary {
    Index genus = 0;
    std::uint64_t count_spectra = 0;
    std::uint64_t count_ap_sets = 0;
    std::uint64_t count_mper_sets = 0;

    friend bool operator==(const GenusSummary&, const GenusSummary&) = default;
};

/// Number of spectra and of distinct AP / odd-AP sets at genus g.
inline GenusSummary summarize(Index genus, unsigned workers = 1) {
    struct Partial {
        std::uint64_t count = 0;
        std::set<APSet> ap, mper;
    };
    auto partials = map_partitions(genus, workers, [](const PartUniverse& u, const std::vector<Index>& p) {
        Partial out;
        for_each_spectrum_of_partition(u, p, [&](const RootSpectrum& r) {
            ++out.count;
            APSet ap = core::algebraic_periods(core::spectrum_to_dold(r));
            out.mper.insert(ap.odd_part());
            out.ap.insert(std::move(ap));
        });
        return out;
    });
    Partial total;
    for (auto& p : partials) {
        total.count += p.count;
        total.ap.merge(p.ap);
        total.mper.merge(p.mper);
    }
    return {genus, total.count, total.ap.size(), total.mper.size()};
}

enum class CatalogFormat { csv, jsonl };

namespace detail {

inline nlohmann::ordered_json number(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();  // beyond int64: decimal string
}

template <typename Tag>
nlohmann::ordered_json pairs(const SparseSequence<Tag>& s) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [n, v] : s) arr.push_back({n, number(v)});
    return arr;
}

inline std::string csv_field(std::string field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace detail

inline const char* csv_header() { return "genus,spectrum,dold,ap,mper"; }

/// One catalog line without its terminator.
inline std::string format_record(const GenusCatalogRecord& rec, CatalogFormat format) {
    if (format == CatalogFormat::jsonl) {
        nlohmann::ordered_json j;
        j["genus"] = rec.genus;
        j["spectrum"] = detail::pairs(rec.spectrum);
        j["dold"] = detail::pairs(rec.dold);
        j["ap"] = rec.ap.elements();
        j["mper"] = rec.mper.elements();
        return j.dump();
    }
    return std::to_string(rec.genus) + ',' + detail::csv_field(literals::format_multiset(rec.spectrum)) + ',' +
           detail::csv_field(literals::format_tuple(rec.dold)) + ',' +
           detail::csv_field(literals::format_set(rec.ap)) + ',' +
           detail::csv_field(literals::format_set(rec.mper));
}

class ExportError : public std::runtime_error {
public:
    ExportError(const std::string& what, std::uint64_t records_written)
        : std::runtime_error(what + " after " + std::to_string(records_written) + " records"),
          records_written_(records_written) {}
    std::uint64_t records_written() const noexcept { return records_written_; }

private:
    std::uint64_t records_written_;
};

/// Writes the genus-g catalog to sink, one LF-terminated line per record in
/// enumeration order (CSV adds a header line). Returns the record count.
/// When `summary` is given it receives the distinct-set counts of the
/// exported records.
inline std::uint64_t export_catalog(Index genus, CatalogFormat format, std::ostream& sink, unsigned workers = 1,
                                    GenusSummary* summary = nullptr) {
    if (genus == 0) throw DomainError("export_catalog: genus must be positive");
    std::uint64_t written = 0;
    auto check = [&] {
        if (!sink) throw ExportError("write failed", written);
    };
    if (format == CatalogFormat::csv) {
        sink << csv_header() << '\n';
        check();
    }
    struct Chunk {
        std::string text;
        std::uint64_t lines = 0;
        std::set<APSet> ap, mper;
    };
    std::set<APSet> ap_sets, mper_sets;
    const PartUniverse universe(genus);
    const auto parts = outer_partitions(genus, universe);
    // Bounded window of partitions in flight keeps memory flat for large g.
    const std::size_t window = std::max<std::size_t>(1, 8 * std::size_t{workers});
    for (std::size_t start = 0; start < parts.size(); start += window) {
        const std::size_t count = std::min(window, parts.size() - start);
        auto chunks = parallel_map_ordered(count, workers, [&](std::size_t i) {
            Chunk c;
            for_each_spectrum_of_partition(universe, parts[start + i], [&](const RootSpectrum& r) {
                auto rec = make_record(genus, r);
                c.text += format_record(rec, format);
                c.text += '\n';
                ++c.lines;
                if (summary) {
                    c.ap.insert(std::move(rec.ap));
                    c.mper.insert(std::move(rec.mper));
                }
            });
            return c;
        });
        for (auto& chunk : chunks) {
            sink << chunk.text;
            check();
            written += chunk.lines;
            ap_sets.merge(chunk.ap);
            mper_sets.merge(chunk.mper);
        }
    }
    sink.flush();
    check();
    if (summary) *summary = {genus, written, ap_sets.size(), mper_sets.size()};
    return written;
}

}  // namespace dold::enumeration
