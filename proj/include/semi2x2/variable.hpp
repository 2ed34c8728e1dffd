#ifndef SEMI2X2_VARIABLE_HPP
#define SEMI2X2_VARIABLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semi2x2 {

// Variable classes, in their fixed serialization order.
//   X(i,j,k): entry (i,j) of the k-th generic 2x2 matrix
//   T(r,s,k): entry (r,s) of the k-th auxiliary q x q matrix
//   Z(r), W(r): the extraction scalars of the cyclic block determinant
enum class VarClass : std::uint8_t { X = 0, T = 1, Z = 2, W = 3 };

// Total order: class order X < T < Z < W, then lexicographic on indices.
// The packed key realizes exactly that order as integer comparison.
class VariableId {
public:
    VariableId() : key_(0) {}

    static VariableId x(int i, int j, int k) {
        check_range(i, 1, 2); check_range(j, 1, 2); check_range(k, 1, kIndexMax);
        return VariableId(pack(VarClass::X, i, j, k));
    }
    static VariableId t(int r, int s, int k) {
        check_range(r, 1, kIndexMax); check_range(s, 1, kIndexMax); check_range(k, 1, kIndexMax);
        return VariableId(pack(VarClass::T, r, s, k));
    }
    static VariableId z(int r) {
        check_range(r, 1, kIndexMax);
        return VariableId(pack(VarClass::Z, r, 0, 0));
    }
    static VariableId w(int r) {
        check_range(r, 1, kIndexMax);
        return VariableId(pack(VarClass::W, r, 0, 0));
    }

    VarClass var_class() const { return static_cast<VarClass>(key_ >> 48); }
    int index1() const { return static_cast<int>((key_ >> 32) & 0xffff); }
    int index2() const { return static_cast<int>((key_ >> 16) & 0xffff); }
    int index3() const { return static_cast<int>(key_ & 0xffff); }

    // slot of an X or T variable
    int slot() const { return index3(); }

    std::uint64_t key() const { return key_; }
    bool operator==(const VariableId& o) const { return key_ == o.key_; }
    bool operator<(const VariableId& o) const { return key_ < o.key_; }

    std::string str() const;                    // "x[1,2,3]", "t[1,1,2]", "z[1]", "w[2]"
    static VariableId parse(const std::string&);

private:
    static constexpr int kIndexMax = 0xffff;
    explicit VariableId(std::uint64_t key) : key_(key) {}
    static std::uint64_t pack(VarClass c, int a, int b, int d) {
        return (static_cast<std::uint64_t>(c) << 48) | (static_cast<std::uint64_t>(a) << 32) |
               (static_cast<std::uint64_t>(b) << 16) | static_cast<std::uint64_t>(d);
    }
    static void check_range(int v, int lo, int hi) {
        if (v < lo || v > hi) throw std::invalid_argument("VariableId: index out of range");
    }
    std::uint64_t key_;
};

}  // namespace semi2x2

#endif
