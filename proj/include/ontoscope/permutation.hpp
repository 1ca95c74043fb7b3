#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ontoscope/errors.hpp"

namespace ontoscope {

class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) {
                throw DomainError("not a permutation");
            }
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
        return Permutation(std::move(inv));
    }

    // (a.after(b))(i) = a(b(i))
    Permutation after(const Permutation& b) const {
        if (size() != b.size()) throw ArityMismatch("composing permutations of different degree");
        std::vector<int> img(img_.size());
        for (int i = 0; i < size(); ++i) img[i] = img_[b(i)];
        return Permutation(std::move(img));
    }

    bool operator==(const Permutation& other) const { return img_ == other.img_; }

    // all n! permutations in lexicographic order; intended for small n
    static std::vector<Permutation> all(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::vector<Permutation> out;
        do {
            out.push_back(Permutation(img));
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }

private:
    std::vector<int> img_;
};

}  // namespace ontoscope
