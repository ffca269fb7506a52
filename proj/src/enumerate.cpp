#include "subsum/enumerate.hpp"

#include <algorithm>
#include <map>

namespace subsum {

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // parts descending; recursion emits reverse-lexicographic order
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Group> abelian_groups_of_order(long long n) {
    if (n < 1) throw InvalidParameterError("group order must be >= 1");
    if (n == 1) return {Group({1})};

    // factor n, then pick a partition of each prime's exponent
    std::map<long long, int> factor;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
            ++factor[p];
            rest /= p;
        }
    if (rest > 1) ++factor[rest];

    // one exponent partition per prime; combine into invariant factors, so a
    // cyclic group of order n is presented as {n} rather than prime powers
    std::vector<std::vector<long long>> shapes{{}};  // invariant factors, descending
    for (const auto& [p, e] : factor) {
        std::vector<std::vector<long long>> next;
        for (const auto& part : partitions_of(e))  // parts descending
            for (const auto& base : shapes) {
                std::vector<long long> shape = base;
                if (shape.size() < part.size()) shape.resize(part.size(), 1);
                for (std::size_t i = 0; i < part.size(); ++i)
                    for (int j = 0; j < part[i]; ++j) shape[i] *= p;
                next.push_back(std::move(shape));
            }
        shapes = std::move(next);
    }

    std::vector<Group> out;
    out.reserve(shapes.size());
    for (auto& shape : shapes) {
        std::vector<int> orders(shape.rbegin(), shape.rend());  // ascending
        out.emplace_back(orders);
    }
    std::sort(out.begin(), out.end(),
              [](const Group& a, const Group& b) { return a.orders() < b.orders(); });
    return out;
}

std::vector<Group> abelian_groups_up_to(long long max_order) {
    std::vector<Group> out;
    for (long long n = 1; n <= max_order; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

namespace {

void add_unique(std::vector<NamedSubgroup>& family, Subgroup sub, std::string literal) {
    for (const auto& existing : family)
        if (existing.subgroup.members == sub.members) return;
    family.push_back({std::move(sub), std::move(literal)});
}

}  // namespace

std::vector<NamedSubgroup> subgroups_nG_family(const Group& g) {
    std::vector<NamedSubgroup> family;
    for (long long n = 1; n <= g.order(); ++n)
        add_unique(family, subgroup_nG(g, n), "n:" + std::to_string(n));
    return family;
}

std::vector<NamedSubgroup> subgroups_single_generator_family(const Group& g) {
    std::vector<NamedSubgroup> family;
    for (long long i = 0; i < g.order(); ++i) {
        Element a = g.element_at(i);
        add_unique(family, subgroup_generated(g, {a}), "gens:" + format_element(a));
    }
    return family;
}

std::vector<NamedSubgroup> subgroup_corpus(const Group& g) {
    std::vector<NamedSubgroup> corpus = subgroups_nG_family(g);
    for (auto& named : subgroups_single_generator_family(g))
        add_unique(corpus, std::move(named.subgroup), std::move(named.literal));
    return corpus;
}

}  // namespace subsum
