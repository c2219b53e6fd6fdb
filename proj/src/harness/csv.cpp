#include "pcweno/harness.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace pcw {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};

using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_out(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "w"));
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

void finish(FilePtr f, const std::string& path) {
    const bool bad = std::ferror(f.get()) != 0;
    if (std::fclose(f.release()) != 0 || bad) throw IoError("write to '" + path + "' failed");
}

void header(std::FILE* f, bool two_d, const SystemModel& m) {
    std::fputs(two_d ? "x,y" : "x", f);
    for (const auto& name : m.component_names()) std::fprintf(f, ",%s", name.c_str());
    if (m.has_source()) std::fputs(",z", f);
    std::fputc('\n', f);
}

}  // namespace

void write_csv(const Field1D& field, const SystemModel& model, const std::string& path) {
    auto f = open_out(path);
    header(f.get(), false, model);
    for (int i = 0; i < field.n(); ++i) {
        std::fprintf(f.get(), "%.17g", field.grid().x(i));
        for (int c = 0; c < field.nvars(); ++c) std::fprintf(f.get(), ",%.17g", field.at(i, c));
        if (model.has_source()) std::fprintf(f.get(), ",%.17g", -field.h(i));
        std::fputc('\n', f.get());
    }
    finish(std::move(f), path);
}

void write_csv(const Field2D& field, const SystemModel& model, const std::string& path) {
    auto f = open_out(path);
    header(f.get(), true, model);
    // ascending x, then y
    for (int i = 0; i < field.nx(); ++i) {
        for (int j = 0; j < field.ny(); ++j) {
            std::fprintf(f.get(), "%.17g,%.17g", field.grid().x(i), field.grid().y(j));
            for (int c = 0; c < field.nvars(); ++c) std::fprintf(f.get(), ",%.17g", field.at(i, j, c));
            if (model.has_source()) std::fprintf(f.get(), ",%.17g", -field.h(i, j));
            std::fputc('\n', f.get());
        }
    }
    finish(std::move(f), path);
}

void write_order_table(const ExperimentReport& rep, const std::string& path) {
    auto f = open_out(path);
    bool first = true;
    for (const auto& t : rep.components) {
        if (!first) std::fputc('\n', f.get());
        first = false;
        std::fprintf(f.get(), "# %s\n", t.name.c_str());
        std::fputs("n,error,order\n", f.get());
        for (std::size_t m = 0; m < t.errors.size(); ++m) {
            std::fprintf(f.get(), "%d,%.17g,", t.errors[m].n, t.errors[m].error);
            if (m > 0 && m - 1 < t.orders.size()) std::fprintf(f.get(), "%.17g", t.orders[m - 1]);
            std::fputc('\n', f.get());
        }
    }
    finish(std::move(f), path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') throw IoError("'" + path + "': bad number '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.header.size()) throw IoError("'" + path + "': row width differs from the header");
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace pcw
