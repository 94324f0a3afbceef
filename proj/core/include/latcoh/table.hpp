#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "latcoh/errors.hpp"
#include "latcoh/rational.hpp"

namespace latcoh {

// A lattice point of Z^s.
using Point = std::vector<int64_t>;

inline bool leq(const Point& a, const Point& b) {
    expect(a.size() == b.size(), Err::ShapeMismatch, "point ranks differ");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Point point_min(const Point& a, const Point& b) {
    expect(a.size() == b.size(), Err::ShapeMismatch, "point ranks differ");
    Point m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
    return m;
}

inline Point point_max(const Point& a, const Point& b) {
    expect(a.size() == b.size(), Err::ShapeMismatch, "point ranks differ");
    Point m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

inline std::string point_str(const Point& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// Axis-aligned box of lattice points, bounds inclusive. Indexing is
// row-major with the last coordinate fastest, so index order equals
// lexicographic order on points — witnesses reported by index scans are
// automatically the lexicographically first ones.
class Rect {
  public:
    Rect() = default;
    Rect(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        expect(lo_.size() == hi_.size(), Err::ShapeMismatch, "rect bound ranks differ");
        for (size_t i = 0; i < lo_.size(); ++i)
            expect(lo_[i] <= hi_[i], Err::BadInput, "empty rectangle axis " + std::to_string(i));
        stride_.assign(lo_.size(), 1);
        count_ = 1;
        for (int i = rank() - 1; i >= 0; --i) {
            stride_[i] = count_;
            count_ = checked_mul(count_, extent(i));
        }
    }
    static Rect box(const Point& c) { return Rect(Point(c.size(), 0), c); }

    int rank() const { return static_cast<int>(lo_.size()); }
    const Point& lo() const { return lo_; }
    const Point& hi() const { return hi_; }
    int64_t count() const { return count_; }
    int64_t extent(int axis) const { return hi_[axis] - lo_[axis] + 1; }
    int64_t stride(int axis) const { return stride_[static_cast<size_t>(axis)]; }

    bool contains(const Point& p) const {
        if (p.size() != lo_.size()) return false;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
        return true;
    }
    int64_t index(const Point& p) const {
        expect(contains(p), Err::BadInput, "point " + point_str(p) + " outside rectangle");
        int64_t idx = 0;
        for (int i = 0; i < rank(); ++i) idx += (p[i] - lo_[i]) * stride_[i];
        return idx;
    }
    Point point(int64_t index) const {
        expect(index >= 0 && index < count_, Err::BadInput, "rect index out of range");
        Point p(lo_.size());
        for (int i = 0; i < rank(); ++i) {
            p[i] = lo_[i] + index / stride_[i];
            index %= stride_[i];
        }
        return p;
    }
    // Lexicographic successor inside the rect; false when p was hi.
    bool next(Point& p) const {
        for (int i = rank() - 1; i >= 0; --i) {
            if (p[i] < hi_[i]) {
                ++p[i];
                return true;
            }
            p[i] = lo_[i];
        }
        return false;
    }
    bool operator==(const Rect& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

  private:
    Point lo_, hi_;
    std::vector<int64_t> stride_;
    int64_t count_ = 0;
};

// Dense integer-valued function on a Rect.
class Table {
  public:
    Table() = default;
    explicit Table(Rect r, int64_t fill = 0)
        : rect_(std::move(r)), values_(static_cast<size_t>(rect_.count()), fill) {}
    Table(Rect r, std::vector<int64_t> values) : rect_(std::move(r)), values_(std::move(values)) {
        expect(static_cast<int64_t>(values_.size()) == rect_.count(), Err::ShapeMismatch,
               "value count does not match rectangle size");
    }

    const Rect& rect() const { return rect_; }
    int64_t size() const { return rect_.count(); }
    int64_t at(const Point& p) const { return values_[static_cast<size_t>(rect_.index(p))]; }
    int64_t& at(const Point& p) { return values_[static_cast<size_t>(rect_.index(p))]; }
    int64_t at_index(int64_t i) const { return values_[static_cast<size_t>(i)]; }
    int64_t& at_index(int64_t i) { return values_[static_cast<size_t>(i)]; }
    const std::vector<int64_t>& values() const { return values_; }

    int64_t min_value() const { return *std::min_element(values_.begin(), values_.end()); }
    int64_t max_value() const { return *std::max_element(values_.begin(), values_.end()); }
    bool operator==(const Table& o) const { return rect_ == o.rect_ && values_ == o.values_; }

  private:
    Rect rect_;
    std::vector<int64_t> values_;
};

// Restriction of a table to a sub-rectangle.
inline Table slice(const Table& t, const Rect& sub) {
    expect(t.rect().contains(sub.lo()) && t.rect().contains(sub.hi()), Err::BadInput,
           "slice rectangle not contained in table");
    Table out(sub);
    Point p = sub.lo();
    int64_t i = 0;
    do {
        out.at_index(i++) = t.at(p);
    } while (sub.next(p));
    return out;
}

// Hilbert function: nondecreasing in every coordinate direction, values >= 0,
// and h = 0 at the origin whenever the rectangle is anchored there.
struct HilbertTable {
    Table t;
};

// Dual/co-Hilbert function: nonincreasing in every coordinate direction.
struct DualTable {
    Table t;
};

// Weight function w_0; no monotonicity, sublevel sets drive everything.
struct WeightTable {
    Table t;
};

HilbertTable make_hilbert(Table t);
DualTable make_dual(Table t);

} // namespace latcoh
