#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgram/diagram.hpp"
#include "dgram/matrix.hpp"
#include "dgram/poly.hpp"
#include "dgram/z2diagram.hpp"

namespace dgram {

enum class Algebra { Partition, Z2, Signed };

std::string to_string(Algebra a);
Algebra parse_algebra(const std::string& name);

// Throws ValidationError unless (s1, s2) is admissible for the algebra at k.
// The partition algebra uses s1 as s and requires s2 == 0.
void check_window(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2);
bool in_window(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2);
// Admissible (s1, s2) pairs in increasing order.
std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(Algebra alg, std::size_t k);

// Block sizes of a symmetric diagram grouped by class type. Z2-family tuples
// have four parts (e-through, Z2-through, e-horizontal, Z2-horizontal); the
// partition algebra has two (through, horizontal). Each part is weakly
// decreasing; an e-pair counts once.
struct PartitionTuple {
    std::vector<std::vector<std::size_t>> parts;

    std::size_t weight() const;
    std::string str() const;  // "(2,∅,1,∅)", repeated parts as "1^2"
    friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

// Total order: part lengths first, then the concatenated sizes with larger
// entries first.
bool tuple_less(const PartitionTuple& a, const PartitionTuple& b);

struct DiagramKey {
    std::size_t i = 1;  // 1-based ordinal inside its (alpha, r1, r2) cell
    PartitionTuple alpha;
    std::size_t r1 = 0, r2 = 0;  // partition algebra: r1 = 0, r2 = r

    std::size_t edges() const { return 2 * r1 + r2; }
};

struct JElement {
    DiagramKey key;
    RowConfig row;                 // top row with through marks
    std::vector<BlockKind> kinds;  // per row block
    SetPartition diagram;          // mirrored, 2 * row size vertices
    std::string text;
};

struct JSet {
    Algebra algebra = Algebra::Z2;
    std::size_t k = 0, s1 = 0, s2 = 0;
    std::vector<JElement> elems;

    std::size_t size() const { return elems.size(); }
    std::size_t row_size() const { return algebra == Algebra::Partition ? k : 2 * k; }
    std::size_t propagating() const { return algebra == Algebra::Partition ? s1 : 2 * s1 + s2; }
};

// Symmetric diagrams with the given through classes, sorted by key.
JSet enumerate_J(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2);
// Cheap projected size used by resource guards (exact, via row counting).
std::size_t count_J(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2);

PartitionTuple underlying_partition(const RowConfig& row, const std::vector<BlockKind>& kinds, bool z2_family);
PartitionTuple underlying_partition(const Z2Diagram& d);
PartitionTuple underlying_partition(const PartitionDiagram& d);

// Contiguous-interval diagram realizing alpha: through classes first, then
// horizontal edges, in part order.
Z2Diagram standard_diagram(const PartitionTuple& alpha, std::size_t k);
PartitionDiagram standard_partition_diagram(const PartitionTuple& alpha, std::size_t k);

struct GramMatrix {
    Algebra algebra = Algebra::Z2;
    std::size_t k = 0, s1 = 0, s2 = 0;
    std::vector<DiagramKey> keys;
    std::vector<std::string> diagrams;
    Matrix<int> exponent;  // loop count, -1 where the entry is zero
    Matrix<Poly> entries;

    std::size_t size() const { return keys.size(); }
};

// Worker count from DIAGRAM_GRAM_THREADS (default: hardware concurrency).
std::size_t worker_count();

GramMatrix build_gram(const JSet& J);
GramMatrix build_gram(Algebra alg, std::size_t k, std::size_t s1, std::size_t s2);

}  // namespace dgram
