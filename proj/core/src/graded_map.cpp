#include "ukoszul/graded_map.hpp"

#include <stdexcept>

namespace ukoszul {

namespace {

// Image of the source tensor basis word under the d-fold tensor power of m,
// as a dense target tensor of length t_n^d.
std::vector<std::uint16_t> tensor_power_column(const Matrix& m, std::size_t d,
                                               std::span<const std::size_t> word) {
    const std::uint32_t p = m.modulus();
    const std::size_t t_n = m.rows();
    std::vector<std::uint16_t> acc{static_cast<std::uint16_t>(1 % p)};
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::uint16_t> next(acc.size() * t_n, 0);
        for (std::size_t u = 0; u < acc.size(); ++u) {
            if (acc[u] == 0)
                continue;
            for (std::size_t j = 0; j < t_n; ++j)
                next[u * t_n + j] = fp::mul(p, acc[u], m.at(j, word[k]));
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<std::size_t> decode_word(std::size_t w, std::size_t base, std::size_t length) {
    std::vector<std::size_t> letters(length);
    for (std::size_t k = length; k-- > 0;) {
        letters[k] = w % base;
        w /= base;
    }
    return letters;
}

} // namespace

GradedMap::GradedMap(ModelPtr source, ModelPtr target, Matrix degree1)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!source_ || !target_)
        throw std::invalid_argument("graded map requires source and target models");
    if (source_->p() != target_->p())
        throw std::invalid_argument("graded map requires a common prime");
    if (degree1.modulus() != source_->p())
        throw std::invalid_argument("degree-1 matrix modulus mismatch");
    if (degree1.rows() != target_->n() || degree1.cols() != source_->n())
        throw std::invalid_argument("degree-1 matrix must be target_n x source_n");

    const std::size_t max_d = std::min(source_->cap(), target_->cap());
    const std::uint32_t p = source_->p();

    // Relation compatibility: each source relation must land in the target
    // relation space under the tensor square.
    {
        const Matrix& rel = source_->presentation().relations.basis();
        const std::size_t s_n = source_->n();
        const std::size_t t_n = target_->n();
        for (std::size_t r = 0; r < rel.rows(); ++r) {
            std::vector<std::uint16_t> img(t_n * t_n, 0);
            for (std::size_t i = 0; i < s_n; ++i)
                for (std::size_t j = 0; j < s_n; ++j) {
                    const std::uint16_t c = rel.at(r, i * s_n + j);
                    if (c == 0)
                        continue;
                    for (std::size_t a = 0; a < t_n; ++a) {
                        if (degree1.at(a, i) == 0)
                            continue;
                        const std::uint16_t ca = fp::mul(p, c, degree1.at(a, i));
                        for (std::size_t b = 0; b < t_n; ++b)
                            img[a * t_n + b] = fp::add(
                                p, img[a * t_n + b], fp::mul(p, ca, degree1.at(b, j)));
                    }
                }
            if (!target_->presentation().relations.contains(img))
                throw std::invalid_argument(
                    "degree-1 matrix does not carry source relations into target relations");
        }
    }

    degree_matrices_.reserve(max_d + 1);
    degree_matrices_.push_back(Matrix::identity(p, 1));
    degree_matrices_.push_back(degree1);
    for (std::size_t d = 2; d <= max_d; ++d) {
        const std::size_t cols = source_->dim(d);
        const std::size_t rows = target_->dim(d);
        Matrix m(p, rows, cols);
        const auto free_cols = source_->kernel_space(d).complement_columns();
        for (std::size_t k = 0; k < cols; ++k) {
            const auto word = decode_word(free_cols[k], source_->n(), d);
            const auto img = tensor_power_column(degree1, d, word);
            const auto reduced = target_->reduce(d, img);
            for (std::size_t r = 0; r < rows; ++r)
                m.set(r, k, reduced[r]);
        }
        degree_matrices_.push_back(std::move(m));
    }
}

GradedMap GradedMap::identity(ModelPtr model) {
    Matrix id = Matrix::identity(model->p(), model->n());
    return GradedMap(model, model, std::move(id));
}

GradedElement GradedMap::apply(const GradedElement& a) const {
    if (a.degree > max_degree())
        throw std::invalid_argument("element degree exceeds the map's degree range");
    return {a.degree, degree_matrices_[a.degree].apply(a.coords)};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.target() != g.source())
        throw std::invalid_argument("compose requires matching middle model");
    return GradedMap(f.source(), g.target(), g.degree1_matrix().multiply(f.degree1_matrix()));
}

} // namespace ukoszul
