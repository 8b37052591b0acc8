#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "bgfd/errors.hpp"

namespace bgfd {

// Dense rank-4 shape in (batch, channel, height, width) order.
struct Shape4 {
    int n = 0;
    int c = 0;
    int h = 0;
    int w = 0;

    std::int64_t numel() const {
        return std::int64_t(n) * c * h * w;
    }
    bool operator==(const Shape4&) const = default;
};

std::string to_string(const Shape4& s);

namespace autograd {

struct Node;

// Sink handed to op backward rules; returns the gradient accumulator of a
// node, or nullptr when that node does not participate in the backward pass.
class GradSink {
public:
    virtual ~GradSink() = default;
    virtual double* grad_of(const Node* node) = 0;
};

// One recorded operation: inputs, a backref to the output it produced and the
// local gradient rule. Records form a DAG; backward() replays it in reverse
// topological order, visiting each record exactly once.
struct OpRecord {
    const char* name = "";
    std::vector<std::shared_ptr<Node>> inputs;
    Node* output = nullptr;
    std::function<void(const double* grad_out, GradSink& sink)> backward_fn;
};

struct Node {
    Shape4 shape;
    std::vector<double> data;
    bool requires_grad = false; // set on leaves by the user
    bool participates = false;  // true if this value depends on a requires_grad leaf
    std::unique_ptr<std::vector<double>> grad; // persistent accumulator, leaves only
    std::shared_ptr<OpRecord> op;              // producer record; null for leaves

    bool is_leaf() const { return op == nullptr; }
};

} // namespace autograd

// Value-semantics handle over a dense rank-4 tensor of 64-bit reals laid out
// row-major in (n, c, h, w) order. Operations never mutate their inputs; the
// handle is cheap to copy and shares the underlying buffer.
class Tensor4 {
public:
    Tensor4() = default;

    static Tensor4 zeros(Shape4 s);
    static Tensor4 full(Shape4 s, double value);
    static Tensor4 from_data(Shape4 s, std::vector<double> values);
    static Tensor4 scalar(double value);
    // Flat row vector (1, 1, 1, len); convenient for spec-style examples.
    static Tensor4 row(std::initializer_list<double> values);

    bool defined() const { return node_ != nullptr; }
    const Shape4& shape() const;
    std::int64_t numel() const { return shape().numel(); }

    const double* data() const;
    double* data(); // mutation allowed only on leaves you own (builders, optimizers)

    double at(int n, int c, int h, int w) const;
    double& at(int n, int c, int h, int w);

    // Scalar extraction; UsageError unless numel() == 1.
    double item() const;

    Tensor4& set_requires_grad(bool value);
    bool requires_grad() const;
    bool is_leaf() const;

    // Gradient accumulated by backward(); undefined handle when absent.
    Tensor4 grad() const;
    void zero_grad();

    // Same values, cut loose from the graph (fresh leaf, requires_grad=false).
    Tensor4 detach() const;
    Tensor4 clone() const;

    bool all_finite() const;

    std::shared_ptr<autograd::Node> node() const { return node_; }
    explicit Tensor4(std::shared_ptr<autograd::Node> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<autograd::Node> node_;
    void require_defined() const;
};

// Reverse-mode sweep from a scalar loss. Every requires_grad leaf reachable
// through recorded operations receives (accumulates) d loss / d leaf.
void backward(const Tensor4& loss);

namespace autograd {

// Shared helper for op implementations: wraps the result, records the op when
// any input participates in gradient flow.
Tensor4 make_result(Shape4 shape, std::vector<double> data, const char* name,
                    std::initializer_list<Tensor4> inputs,
                    std::function<void(const double*, GradSink&)> backward_fn);
Tensor4 make_result(Shape4 shape, std::vector<double> data, const char* name,
                    const std::vector<Tensor4>& inputs,
                    std::function<void(const double*, GradSink&)> backward_fn);

} // namespace autograd

} // namespace bgfd
