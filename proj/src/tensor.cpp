#include "bgfd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bgfd {

std::string to_string(const Shape4& s) {
    std::ostringstream os;
    os << "(" << s.n << ", " << s.c << ", " << s.h << ", " << s.w << ")";
    return os.str();
}

namespace {

std::shared_ptr<autograd::Node> make_node(Shape4 s, std::vector<double> data) {
    if (s.n < 0 || s.c < 0 || s.h < 0 || s.w < 0) {
        throw ShapeError("tensor dims must be nonnegative, got " + to_string(s));
    }
    if (std::int64_t(data.size()) != s.numel()) {
        throw ShapeError("data length " + std::to_string(data.size()) +
                         " does not match shape " + to_string(s));
    }
    auto node = std::make_shared<autograd::Node>();
    node->shape = s;
    node->data = std::move(data);
    return node;
}

} // namespace

Tensor4 Tensor4::zeros(Shape4 s) {
    return Tensor4(make_node(s, std::vector<double>(s.numel(), 0.0)));
}

Tensor4 Tensor4::full(Shape4 s, double value) {
    return Tensor4(make_node(s, std::vector<double>(s.numel(), value)));
}

Tensor4 Tensor4::from_data(Shape4 s, std::vector<double> values) {
    return Tensor4(make_node(s, std::move(values)));
}

Tensor4 Tensor4::scalar(double value) {
    return from_data({1, 1, 1, 1}, {value});
}

Tensor4 Tensor4::row(std::initializer_list<double> values) {
    return from_data({1, 1, 1, int(values.size())}, std::vector<double>(values));
}

void Tensor4::require_defined() const {
    if (!node_) throw UsageError("operation on an undefined tensor");
}

const Shape4& Tensor4::shape() const {
    require_defined();
    return node_->shape;
}

const double* Tensor4::data() const {
    require_defined();
    return node_->data.data();
}

double* Tensor4::data() {
    require_defined();
    return node_->data.data();
}

double Tensor4::at(int n, int c, int h, int w) const {
    const Shape4& s = shape();
    return node_->data[((std::int64_t(n) * s.c + c) * s.h + h) * s.w + w];
}

double& Tensor4::at(int n, int c, int h, int w) {
    const Shape4& s = shape();
    return node_->data[((std::int64_t(n) * s.c + c) * s.h + h) * s.w + w];
}

double Tensor4::item() const {
    require_defined();
    if (numel() != 1) {
        throw UsageError("item() requires a scalar tensor, shape is " + to_string(shape()));
    }
    return node_->data[0];
}

Tensor4& Tensor4::set_requires_grad(bool value) {
    require_defined();
    if (!node_->is_leaf()) {
        throw UsageError("requires_grad can only be toggled on leaf tensors");
    }
    node_->requires_grad = value;
    node_->participates = value;
    return *this;
}

bool Tensor4::requires_grad() const {
    require_defined();
    return node_->requires_grad;
}

bool Tensor4::is_leaf() const {
    require_defined();
    return node_->is_leaf();
}

Tensor4 Tensor4::grad() const {
    require_defined();
    if (!node_->grad) return Tensor4();
    return from_data(node_->shape, *node_->grad);
}

void Tensor4::zero_grad() {
    require_defined();
    if (node_->grad) std::fill(node_->grad->begin(), node_->grad->end(), 0.0);
}

Tensor4 Tensor4::detach() const {
    require_defined();
    return from_data(node_->shape, node_->data);
}

Tensor4 Tensor4::clone() const {
    return detach();
}

bool Tensor4::all_finite() const {
    require_defined();
    for (double v : node_->data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

namespace autograd {

Tensor4 make_result(Shape4 shape, std::vector<double> data, const char* name,
                    const std::vector<Tensor4>& inputs,
                    std::function<void(const double*, GradSink&)> backward_fn) {
    auto node = std::make_shared<Node>();
    node->shape = shape;
    if (std::int64_t(data.size()) != shape.numel()) {
        throw ShapeError(std::string(name) + ": result buffer does not match shape " +
                         to_string(shape));
    }
    node->data = std::move(data);

    bool participates = false;
    for (const Tensor4& t : inputs) {
        if (t.defined() && t.node()->participates) {
            participates = true;
            break;
        }
    }
    if (participates) {
        auto rec = std::make_shared<OpRecord>();
        rec->name = name;
        for (const Tensor4& t : inputs) {
            if (t.defined()) rec->inputs.push_back(t.node());
        }
        rec->output = node.get();
        rec->backward_fn = std::move(backward_fn);
        node->op = std::move(rec);
        node->participates = true;
    }
    return Tensor4(std::move(node));
}

Tensor4 make_result(Shape4 shape, std::vector<double> data, const char* name,
                    std::initializer_list<Tensor4> inputs,
                    std::function<void(const double*, GradSink&)> backward_fn) {
    return make_result(shape, std::move(data), name, std::vector<Tensor4>(inputs),
                       std::move(backward_fn));
}

} // namespace autograd

namespace {

using autograd::GradSink;
using autograd::Node;

class BackwardPass : public GradSink {
public:
    double* grad_of(const Node* node) override {
        if (!node->participates) return nullptr;
        if (node->is_leaf()) {
            auto* mut = const_cast<Node*>(node);
            if (!mut->requires_grad) return nullptr;
            if (!mut->grad) {
                mut->grad = std::make_unique<std::vector<double>>(node->shape.numel(), 0.0);
            }
            return mut->grad->data();
        }
        auto& buf = transient_[node];
        if (buf.empty()) buf.assign(node->shape.numel(), 0.0);
        return buf.data();
    }

    std::vector<double>* transient_of(const Node* node) {
        auto it = transient_.find(node);
        return it == transient_.end() ? nullptr : &it->second;
    }

private:
    std::unordered_map<const Node*, std::vector<double>> transient_;
};

} // namespace

void backward(const Tensor4& loss) {
    if (!loss.defined()) throw UsageError("backward: undefined tensor");
    if (loss.numel() != 1) {
        throw UsageError("backward: loss must be a scalar, shape is " + to_string(loss.shape()));
    }
    if (!std::isfinite(loss.item())) {
        throw NumericError("backward: loss is not finite");
    }

    auto root = loss.node();
    if (!root->participates || root->is_leaf()) {
        // Nothing upstream requires gradients; a no-op sweep.
        if (root->requires_grad) {
            if (!root->grad) root->grad = std::make_unique<std::vector<double>>(1, 0.0);
            (*root->grad)[0] += 1.0;
        }
        return;
    }

    // Iterative post-order DFS: children (op inputs) come before the node, so
    // the reversed order visits each record after everything that consumes it.
    std::vector<Node*> order;
    std::unordered_set<const Node*> visited;
    std::vector<std::pair<Node*, size_t>> stack;
    stack.emplace_back(root.get(), 0);
    visited.insert(root.get());
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->op && next < node->op->inputs.size()) {
            Node* child = node->op->inputs[next++].get();
            if (child->participates && !child->is_leaf() && !visited.count(child)) {
                visited.insert(child);
                stack.emplace_back(child, 0);
            }
            continue;
        }
        order.push_back(node);
        stack.pop_back();
    }

    BackwardPass pass;
    double* seed = pass.grad_of(root.get());
    seed[0] += 1.0;

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Node* node = *it;
        if (!node->op) continue;
        std::vector<double>* gout = pass.transient_of(node);
        if (!gout) continue; // no gradient flowed into this record
        node->op->backward_fn(gout->data(), pass);
    }
}

} // namespace bgfd
