#include "normord/rewriter.hpp"

#include "normord/errors.hpp"

#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace normord {

void MixedExpression::add(const Word& w, const CoeffPoly& c) {
    if (c.ringS() != s_) throw ConfigError("expression ring mismatch");
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

namespace {

/// Termination measure: (X count, inversions) strictly drops on every rewrite.
/// The word itself breaks ties so the key is unique.
using QueueKey = std::tuple<std::size_t, std::size_t, std::string>;

QueueKey keyOf(const Word& w) {
    return {w.countX(), w.inversions(), w.letters()};
}

class Rewriter {
public:
    Rewriter(int s, RewriteOptions opts) : s_(s), opts_(opts), rng_(opts.seed) {
        if (s < 0) throw ConfigError("s must be nonnegative");
        for (int j = 0; j <= s; ++j) alpha_.push_back(CoeffPoly::alpha(s, j));
        q_ = CoeffPoly::qPower(s, 1);
    }

    void push(const Word& w, const CoeffPoly& c) {
        if (c.isZero()) return;
        auto [it, inserted] = queue_.try_emplace(keyOf(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) queue_.erase(it);
        }
    }

    NormalForm run() {
        NormalForm out(s_);
        while (!queue_.empty()) {
            auto last = std::prev(queue_.end());
            QueueKey key = last->first;
            CoeffPoly coeff = std::move(last->second);
            queue_.erase(last);
            const std::string& letters = std::get<2>(key);
            if (std::get<1>(key) == 0) {
                std::size_t xs = std::get<0>(key);
                out.addTerm(static_cast<int>(letters.size() - xs), static_cast<int>(xs), coeff);
                continue;
            }
            std::size_t at = pickRedex(letters);
            // letters[at] == 'X', letters[at + 1] == 'Y'
            std::string swapped = letters;
            std::swap(swapped[at], swapped[at + 1]);
            emit(key, swapped, coeff * q_);
            std::string prefix = letters.substr(0, at);
            std::string suffix = letters.substr(at + 2);
            for (int j = 0; j <= s_; ++j) {
                emit(key, prefix + std::string(static_cast<std::size_t>(j), 'Y') + suffix, coeff * alpha_[static_cast<std::size_t>(j)]);
            }
        }
        return out;
    }

private:
    void emit(const QueueKey& parent, std::string letters, const CoeffPoly& c) {
        Word w(std::move(letters));
        QueueKey k = keyOf(w);
        if (!(std::tie(std::get<0>(k), std::get<1>(k)) < std::tie(std::get<0>(parent), std::get<1>(parent))))
            throw std::logic_error("rewrite step did not decrease the termination measure");
        push(w, c);
    }

    std::size_t pickRedex(const std::string& letters) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i] == 'X' && letters[i + 1] == 'Y') sites.push_back(i);
        }
        switch (opts_.strategy) {
            case RedexStrategy::Leftmost: return sites.front();
            case RedexStrategy::Random: return sites[static_cast<std::size_t>(rng_() % sites.size())];
            case RedexStrategy::Rightmost: break;
        }
        return sites.back();
    }

    int s_;
    RewriteOptions opts_;
    std::mt19937_64 rng_;
    std::vector<CoeffPoly> alpha_;
    CoeffPoly q_{0};
    std::map<QueueKey, CoeffPoly> queue_;
};

}  // namespace

NormalForm normalOrder(const Word& w, int s, RewriteOptions opts) {
    Rewriter rw(s, opts);
    rw.push(w, CoeffPoly::one(s));
    return rw.run();
}

NormalForm normalOrderExpression(const MixedExpression& e, int s, RewriteOptions opts) {
    if (e.ringS() != s) throw ConfigError("expression ring s=" + std::to_string(e.ringS()) + " differs from s=" + std::to_string(s));
    Rewriter rw(s, opts);
    for (const auto& [w, c] : e.terms()) rw.push(w, c);
    return rw.run();
}

MixedExpression binomialExpansion(int m, int s) {
    if (m < 0) throw DomainError("binomial power must be nonnegative");
    if (m > 24) throw LimitExceeded("binomial expansion beyond 2^24 words");
    MixedExpression e(s);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::string letters(static_cast<std::size_t>(m), 'Y');
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1) letters[static_cast<std::size_t>(i)] = 'X';
        }
        e.add(Word(std::move(letters)));
    }
    return e;
}

}  // namespace normord
