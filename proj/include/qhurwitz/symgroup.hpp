#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhurwitz/partition.hpp"
#include "qhurwitz/rational.hpp"

namespace qhurwitz {

/// An ordered tuple of ramification profiles of the same degree n, none of
/// them the identity class (every colength is at least 1).
class BranchConfig {
public:
    explicit BranchConfig(std::vector<Partition> profiles) : profiles_(std::move(profiles))
    {
        if (profiles_.empty())
            throw std::invalid_argument("BranchConfig needs at least one profile");
        const int n = profiles_.front().weight();
        for (const auto& mu : profiles_) {
            if (mu.weight() != n)
                throw std::invalid_argument("BranchConfig profiles must all have the same weight");
            if (mu.colength() < 1)
                throw std::invalid_argument("BranchConfig profiles must have nonzero colength");
        }
    }

    const std::vector<Partition>& profiles() const noexcept { return profiles_; }
    int degree() const noexcept { return profiles_.front().weight(); }
    int size() const noexcept { return static_cast<int>(profiles_.size()); }

    int total_colength() const
    {
        int total = 0;
        for (const auto& mu : profiles_)
            total += mu.colength();
        return total;
    }

    /// The colengths sorted into a partition of total_colength().
    Partition colength_profile() const
    {
        std::vector<int> parts;
        for (const auto& mu : profiles_)
            parts.push_back(mu.colength());
        return Partition::from_unsorted(std::move(parts));
    }

    friend bool operator==(const BranchConfig&, const BranchConfig&) = default;
    friend auto operator<=>(const BranchConfig&, const BranchConfig&) = default;

private:
    std::vector<Partition> profiles_;
};

namespace detail {

// Beta-set (first column hook lengths) of a partition padded to `length` rows.
inline std::vector<int> beta_set(const Partition& lambda, int length)
{
    std::vector<int> beta(static_cast<std::size_t>(length), 0);
    for (int i = 0; i < length; ++i) {
        int part = i < lambda.length() ? lambda.parts()[static_cast<std::size_t>(i)] : 0;
        beta[static_cast<std::size_t>(i)] = part + (length - 1 - i);
    }
    return beta;
}

inline Partition from_beta_set(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int length = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < length; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

// Murnaghan-Nakayama on (lambda, mu[start..]). Strips of length mu[start]
// are removed by sliding a bead r places down the abacus; the sign is the
// parity of beads jumped over (the leg length of the rim hook).
inline std::int64_t mn_recurse(const Partition& lambda, const std::vector<int>& mu, std::size_t start,
                               std::map<std::pair<Partition, std::size_t>, std::int64_t>& memo)
{
    if (start == mu.size())
        return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, start);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int r = mu[start];
    const auto beta = beta_set(lambda, lambda.length());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++jumped;
        auto moved = beta;
        moved[i] = target;
        std::int64_t sub = mn_recurse(from_beta_set(std::move(moved)), mu, start + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// Character table of S_n, keyed by (lambda, mu), both partitions of n.
class CharTable {
public:
    static constexpr const char* kFormatTag = "qhurwitz-chartable";
    static constexpr int kFormatVersion = 1;

    CharTable() = default;

    /// Computes every value by the memoized Murnaghan-Nakayama rule.
    static CharTable compute(int n)
    {
        if (n < 0)
            throw std::invalid_argument("CharTable: negative degree");
        CharTable table;
        table.n_ = n;
        const auto parts = enumerate_partitions(n);
        for (const auto& mu : parts) {
            std::map<std::pair<Partition, std::size_t>, std::int64_t> memo;
            for (const auto& lambda : parts)
                table.values_[{lambda, mu}] = detail::mn_recurse(lambda, mu.parts(), 0, memo);
        }
        return table;
    }

    int degree() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::map<std::pair<Partition, Partition>, std::int64_t>& values() const noexcept { return values_; }

    std::int64_t at(const Partition& lambda, const Partition& mu) const
    {
        auto it = values_.find({lambda, mu});
        if (it == values_.end())
            throw std::out_of_range("CharTable: (" + to_string(lambda) + ";" + to_string(mu) + ") not in table of S_" +
                                    std::to_string(n_));
        return it->second;
    }

    /// Line-oriented text: a header "qhurwitz-chartable v1 n=<n>" followed by
    /// "lambda;mu;value" rows.
    void save(const std::filesystem::path& file) const
    {
        auto tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out)
                throw std::runtime_error("cannot write character cache " + tmp.string());
            out << kFormatTag << " v" << kFormatVersion << " n=" << n_ << '\n';
            for (const auto& [key, value] : values_)
                out << to_string(key.first) << ';' << to_string(key.second) << ';' << value << '\n';
        }
        std::filesystem::rename(tmp, file);
    }

    /// Returns nullopt when the file is missing, has a foreign header, or is
    /// for a different n.
    static std::optional<CharTable> load(const std::filesystem::path& file, int n)
    {
        std::ifstream in(file);
        if (!in)
            return std::nullopt;
        std::string header;
        std::getline(in, header);
        std::ostringstream expected;
        expected << kFormatTag << " v" << kFormatVersion << " n=" << n;
        if (header != expected.str())
            return std::nullopt;
        CharTable table;
        table.n_ = n;
        std::string line;
        try {
            while (std::getline(in, line)) {
                if (line.empty())
                    continue;
                auto s1 = line.find(';');
                auto s2 = line.find(';', s1 + 1);
                if (s1 == std::string::npos || s2 == std::string::npos)
                    return std::nullopt;
                auto lambda = parse_partition(line.substr(0, s1));
                auto mu = parse_partition(line.substr(s1 + 1, s2 - s1 - 1));
                if (lambda.weight() != n || mu.weight() != n)
                    return std::nullopt;
                table.values_[{lambda, mu}] = std::stoll(line.substr(s2 + 1));
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
        const auto p = static_cast<std::size_t>(partition_count(n));
        if (table.values_.size() != p * p)
            return std::nullopt;
        return table;
    }

private:
    int n_ = 0;
    std::map<std::pair<Partition, Partition>, std::int64_t> values_;
};

/// Process-wide store of character tables, loaded or computed lazily per n.
///
/// When a cache directory is configured (explicitly, or via the
/// HURWITZ_CACHE_DIR environment variable) tables are read from and written
/// to `<dir>/chartable_n<n>.txt`. Lookups after the first are lock-free reads
/// of an immutable table.
class CharacterStore {
public:
    static CharacterStore& instance()
    {
        static CharacterStore store;
        return store;
    }

    void set_cache_dir(std::optional<std::filesystem::path> dir)
    {
        std::lock_guard lock(mutex_);
        cache_dir_ = std::move(dir);
        env_checked_ = true;
    }

    std::optional<std::filesystem::path> cache_dir()
    {
        std::lock_guard lock(mutex_);
        resolve_env();
        return cache_dir_;
    }

    static std::filesystem::path cache_file(const std::filesystem::path& dir, int n)
    {
        return dir / ("chartable_n" + std::to_string(n) + ".txt");
    }

    const CharTable& table(int n)
    {
        std::lock_guard lock(mutex_);
        if (auto it = tables_.find(n); it != tables_.end())
            return *it->second;
        resolve_env();
        std::unique_ptr<CharTable> table;
        if (cache_dir_) {
            if (auto loaded = CharTable::load(cache_file(*cache_dir_, n), n))
                table = std::make_unique<CharTable>(std::move(*loaded));
        }
        if (!table) {
            table = std::make_unique<CharTable>(CharTable::compute(n));
            if (cache_dir_) {
                std::error_code ec;
                std::filesystem::create_directories(*cache_dir_, ec);
                try {
                    table->save(cache_file(*cache_dir_, n));
                } catch (const std::exception&) {
                    // An unwritable cache only costs recomputation.
                }
            }
        }
        auto& ref = *table;
        tables_.emplace(n, std::move(table));
        return ref;
    }

    /// Drops in-memory tables (the on-disk cache is untouched).
    void clear()
    {
        std::lock_guard lock(mutex_);
        tables_.clear();
    }

private:
    void resolve_env()
    {
        if (env_checked_)
            return;
        env_checked_ = true;
        if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env != nullptr && *env != '\0')
            cache_dir_ = std::filesystem::path(env);
    }

    std::mutex mutex_;
    bool env_checked_ = false;
    std::optional<std::filesystem::path> cache_dir_;
    std::map<int, std::unique_ptr<CharTable>> tables_;
};

/// Irreducible character value chi_lambda(mu) of S_n.
inline std::int64_t character(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: lambda and mu must have the same weight");
    return CharacterStore::instance().table(lambda.weight()).at(lambda, mu);
}

/// dim(lambda) by the hook length formula.
inline BigInt dimension(const Partition& lambda)
{
    const auto conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
            int arm = lambda.parts()[static_cast<std::size_t>(i)] - j - 1;
            int leg = conj.parts()[static_cast<std::size_t>(j)] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.weight())) / hooks;
}

/// Size of the conjugacy class of cycle type mu: n! / z_mu.
inline BigInt class_size(const Partition& mu)
{
    return factorial(static_cast<unsigned>(mu.weight())) / z_order(mu);
}

/// Pure Hurwitz number H(mu^(1), ..., mu^(k)) in S_n via the Frobenius formula
///   H = sum_lambda (dim lambda / n!)^2 prod_j |C_j| chi_lambda(mu^(j)) / dim lambda.
/// The empty tuple gives 1/n! (the empty product is the identity).
inline BigRational frobenius_hurwitz(int n, const std::vector<Partition>& profiles)
{
    for (const auto& mu : profiles)
        if (mu.weight() != n)
            throw std::invalid_argument("frobenius_hurwitz: profiles must all be partitions of n");
    const BigRational n_fact(factorial(static_cast<unsigned>(n)));
    std::vector<BigInt> sizes;
    for (const auto& mu : profiles)
        sizes.push_back(class_size(mu));

    const auto& table = CharacterStore::instance().table(n);
    BigRational total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
        const BigRational dim(dimension(lambda));
        BigRational term = (dim / n_fact) * (dim / n_fact);
        for (std::size_t j = 0; j < profiles.size() && term != 0; ++j)
            term *= BigRational(sizes[j] * table.at(lambda, profiles[j])) / dim;
        total += term;
    }
    return total;
}

inline BigRational frobenius_hurwitz(const std::vector<Partition>& profiles)
{
    if (profiles.empty())
        throw std::invalid_argument("frobenius_hurwitz: empty profile list needs an explicit n");
    return frobenius_hurwitz(profiles.front().weight(), profiles);
}

namespace detail {

using Perm = std::vector<std::uint8_t>;

inline Partition cycle_type(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

inline Perm compose(const Perm& a, const Perm& b)
{
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

inline std::vector<Perm> class_elements(const Partition& mu)
{
    Perm p(static_cast<std::size_t>(mu.weight()));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    std::vector<Perm> out;
    do {
        if (cycle_type(p) == mu)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::int64_t count_factorizations(const std::vector<std::vector<Perm>>& classes, const Partition& last_type,
                                         std::size_t depth, const Perm& product)
{
    if (depth == classes.size())
        return cycle_type(product) == last_type ? 1 : 0;
    std::int64_t total = 0;
    for (const auto& h : classes[depth])
        total += count_factorizations(classes, last_type, depth + 1, compose(product, h));
    return total;
}

} // namespace detail

inline constexpr int kBruteForceMaxDegree = 7;
inline constexpr int kBruteForceMaxProfiles = 4;

/// H(mu^(1), ..., mu^(k)) by literally counting k-tuples in S_n whose ordered
/// product is the identity, divided by n!. The last factor is forced to be
/// the inverse of the running product, so only its cycle type is checked.
inline BigRational brute_force_hurwitz(int n, const std::vector<Partition>& profiles)
{
    if (n < 0 || n > kBruteForceMaxDegree)
        throw std::invalid_argument("brute_force_hurwitz: n must be at most " + std::to_string(kBruteForceMaxDegree));
    if (profiles.size() > static_cast<std::size_t>(kBruteForceMaxProfiles))
        throw std::invalid_argument("brute_force_hurwitz: at most " + std::to_string(kBruteForceMaxProfiles) +
                                    " profiles");
    int colength_sum = 0;
    for (const auto& mu : profiles) {
        if (mu.weight() != n)
            throw std::invalid_argument("brute_force_hurwitz: profiles must all be partitions of n");
        colength_sum += mu.colength();
    }
    const BigRational n_fact(factorial(static_cast<unsigned>(n)));
    if (profiles.empty())
        return 1 / n_fact;
    // Odd total colength means an odd product, never the identity.
    if (colength_sum % 2 != 0)
        return 0;

    std::vector<std::vector<detail::Perm>> classes;
    for (std::size_t j = 0; j + 1 < profiles.size(); ++j)
        classes.push_back(detail::class_elements(profiles[j]));
    detail::Perm identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), std::uint8_t{0});
    const auto count = detail::count_factorizations(classes, profiles.back(), 0, identity);
    return BigRational(count) / n_fact;
}

inline BigRational brute_force_hurwitz(const std::vector<Partition>& profiles)
{
    if (profiles.empty())
        throw std::invalid_argument("brute_force_hurwitz: empty profile list needs an explicit n");
    return brute_force_hurwitz(profiles.front().weight(), profiles);
}

} // namespace qhurwitz
