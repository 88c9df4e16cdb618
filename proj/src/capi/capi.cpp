#include "graphbench.h"

#include "bench/bench.hpp"
#include "core/dataset.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "gen/generator.hpp"
#include "kernels/kernels.hpp"
#include "stats/stats.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace graphbench;

struct gb_edgelist {
    EdgeList impl;
};
struct gb_graph {
    CsrGraph impl;
};
struct gb_result {
    KernelResult impl;
};

namespace {

thread_local std::string g_last_error;

gb_status fail(gb_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
gb_status guarded(Fn&& fn) {
    try {
        fn();
        return GB_OK;
    } catch (const invalid_input_error& e) {
        return fail(GB_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const parse_error& e) {
        return fail(GB_ERROR_PARSE, e.what());
    } catch (const io_error& e) {
        return fail(GB_ERROR_IO, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(GB_ERROR_NOMEM, e.what());
    } catch (const std::exception& e) {
        return fail(GB_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

DegreeLimitSpec limits_from(int32_t kind, uint64_t constant, double exponent, uint64_t min_deg,
                            uint64_t max_deg) {
    if (kind == GB_DEGREE_CONSTANT) return DegreeLimitSpec::make_constant(constant);
    if (kind == GB_DEGREE_POWER_LAW) return DegreeLimitSpec::make_power_law(exponent, min_deg, max_deg);
    throw invalid_input_error("unknown degree limit kind " + std::to_string(kind));
}

KernelParams params_from(const gb_kernel_params* p) {
    KernelParams out;
    if (p) {
        out.max_iters = p->max_iters;
        out.source = p->source;
        out.k = p->k;
        out.damping = p->damping;
    }
    return out;
}

FileFormat format_from(gb_format f) {
    if (f == GB_FORMAT_TEXT) return FileFormat::Text;
    if (f == GB_FORMAT_BINARY) return FileFormat::Binary;
    throw invalid_input_error("unknown file format code");
}

void require(bool ok, const char* what) {
    if (!ok) throw invalid_input_error(what);
}

} // namespace

extern "C" {

const char* gb_version(void) { return "0.1.0"; }

const char* gb_last_error(void) { return g_last_error.c_str(); }

void gb_string_free(char* s) { delete[] s; }

void gb_gen_config_init(gb_gen_config* config) {
    if (!config) return;
    *config = gb_gen_config{};
    config->n = 0;
    config->alpha = 1.0;
    config->group_diameter_const = 6;
    config->degree_kind = GB_DEGREE_POWER_LAW;
    config->degree_constant = 16;
    config->degree_exponent = 2.2;
    config->degree_min = 2;
    config->degree_max = 0;
    config->seed = 1;
    config->threads = 1;
}

void gb_ldbc_config_init(gb_ldbc_config* config) {
    if (!config) return;
    *config = gb_ldbc_config{};
    config->p = 0.95;
    config->p_limit = 0.2;
    config->degree_kind = GB_DEGREE_POWER_LAW;
    config->degree_constant = 16;
    config->degree_exponent = 2.2;
    config->degree_min = 2;
    config->degree_max = 0;
    config->seed = 1;
}

gb_status gb_generate(const gb_gen_config* config, gb_edgelist** out, char** report_json) {
    return guarded([&] {
        require(config && out, "null argument");
        GeneratorConfig gc;
        gc.n = config->n;
        gc.alpha = config->alpha;
        if (config->target_diameter > 0) gc.target_diameter = config->target_diameter;
        gc.group_diameter_const = config->group_diameter_const;
        gc.degree_limits = limits_from(config->degree_kind, config->degree_constant,
                                       config->degree_exponent, config->degree_min,
                                       config->degree_max);
        gc.seed = config->seed;
        gc.random_weights = config->random_weights != 0;
        gc.threads = config->threads > 0 ? config->threads : 1;
        GenerationResult result = generate(gc);
        if (report_json) *report_json = dup_string(result.report.to_json());
        *out = new gb_edgelist{std::move(result.edges)};
    });
}

gb_status gb_generate_ldbc(const gb_ldbc_config* config, gb_edgelist** out, char** report_json) {
    return guarded([&] {
        require(config && out, "null argument");
        LdbcRefConfig lc;
        lc.n = config->n;
        lc.p = config->p;
        lc.p_limit = config->p_limit;
        lc.degree_limits = limits_from(config->degree_kind, config->degree_constant,
                                       config->degree_exponent, config->degree_min,
                                       config->degree_max);
        lc.seed = config->seed;
        GenerationResult result = generate_ldbc_reference(lc);
        if (report_json) *report_json = dup_string(result.report.to_json());
        *out = new gb_edgelist{std::move(result.edges)};
    });
}

gb_status gb_edgelist_read(const char* path, gb_format format, gb_edgelist** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new gb_edgelist{read_edge_list(path, format_from(format))};
    });
}

gb_status gb_edgelist_write(const gb_edgelist* edges, const char* path, gb_format format) {
    return guarded([&] {
        require(edges && path, "null argument");
        write_edge_list(edges->impl, path, format_from(format));
    });
}

uint64_t gb_edgelist_num_vertices(const gb_edgelist* edges) { return edges ? edges->impl.n : 0; }

uint64_t gb_edgelist_num_edges(const gb_edgelist* edges) { return edges ? edges->impl.size() : 0; }

void gb_edgelist_free(gb_edgelist* edges) { delete edges; }

gb_status gb_graph_build(const gb_edgelist* edges, gb_graph** out) {
    return guarded([&] {
        require(edges && out, "null argument");
        *out = new gb_graph{build_csr(edges->impl)};
    });
}

uint64_t gb_graph_num_vertices(const gb_graph* graph) { return graph ? graph->impl.num_vertices() : 0; }

uint64_t gb_graph_num_edges(const gb_graph* graph) { return graph ? graph->impl.num_edges() : 0; }

void gb_graph_free(gb_graph* graph) { delete graph; }

gb_status gb_dataset_name(uint64_t n, uint64_t m, const char* variant, char* buffer, size_t size) {
    return guarded([&] {
        require(buffer && size > 0, "null buffer");
        DatasetVariant v = variant ? variant_from_str(variant) : DatasetVariant::Std;
        std::string name = dataset_name(n, m, v).str();
        require(name.size() + 1 <= size, "buffer too small for dataset name");
        std::memcpy(buffer, name.c_str(), name.size() + 1);
    });
}

void gb_kernel_params_init(gb_kernel_params* params) {
    if (!params) return;
    params->max_iters = 10;
    params->source = 0;
    params->k = 5;
    params->damping = 0.85;
}

gb_status gb_run_kernel(const gb_graph* graph, const char* kernel, const gb_kernel_params* params,
                        int32_t threads, gb_result** out) {
    return guarded([&] {
        require(graph && kernel && out, "null argument");
        *out = new gb_result{
            run_kernel(kernel, graph->impl, params_from(params), threads > 0 ? threads : 1)};
    });
}

int32_t gb_result_has_scalar(const gb_result* result) {
    return result && result->impl.scalar ? 1 : 0;
}

uint64_t gb_result_scalar(const gb_result* result) {
    return result && result->impl.scalar ? *result->impl.scalar : 0;
}

uint64_t gb_result_size(const gb_result* result) {
    return result ? result->impl.per_vertex.size() : 0;
}

const double* gb_result_values(const gb_result* result) {
    return result ? result->impl.per_vertex.data() : nullptr;
}

gb_status gb_result_write(const gb_result* result, const char* path) {
    return guarded([&] {
        require(result && path, "null argument");
        result->impl.write(path);
    });
}

void gb_result_free(gb_result* result) { delete result; }

gb_status gb_graph_stats(const gb_graph* graph, char** json) {
    return guarded([&] {
        require(graph && json, "null argument");
        *json = dup_string(graph_stats(graph->impl).to_json());
    });
}

gb_status gb_community_stats(const gb_graph* graph, const uint64_t* assignment, uint64_t length,
                             const char* bridge_def, int32_t as_csv, char** out) {
    return guarded([&] {
        require(graph && assignment && out, "null argument");
        BridgeDef def = BridgeDef::Bridges;
        if (bridge_def) {
            std::string s = bridge_def;
            if (s == "cutfraction")
                def = BridgeDef::CutFraction;
            else if (s != "bridges")
                throw invalid_input_error("bridge_def must be bridges or cutfraction");
        }
        std::vector<uint64_t> assign(assignment, assignment + length);
        CommunityStats stats = community_stats(graph->impl, assign, def);
        *out = dup_string(as_csv ? stats.to_csv() : stats.to_json());
    });
}

gb_status gb_similarity_report(const gb_graph* a, const gb_graph* b, const char* method,
                               char** json) {
    return guarded([&] {
        require(a && b && json, "null argument");
        *json = dup_string(similarity_report(a->impl, b->impl, method ? method : "lpa").to_json());
    });
}

gb_status gb_bench_run(const char* graph_path, gb_format format, const char* kernel,
                       const gb_kernel_params* params, int32_t threads, int32_t repeats,
                       const char* dataset_label, const char* result_path, char** report_json) {
    return guarded([&] {
        require(graph_path && kernel && report_json, "null argument");
        RunOptions options;
        options.threads = threads > 0 ? threads : 1;
        options.repeats = repeats > 0 ? repeats : 3;
        options.params = params_from(params);
        options.format = format_from(format);
        if (dataset_label) options.dataset_label = dataset_label;
        if (result_path) options.result_path = result_path;
        *report_json = dup_string(run_once(kernel, graph_path, options).to_json());
    });
}

gb_status gb_bench_speedup(const char* graph_path, gb_format format, const char* kernel,
                           const gb_kernel_params* params, const int32_t* thread_counts,
                           uint64_t num_counts, int32_t explicit_counts, int32_t repeats,
                           char** table_json) {
    return guarded([&] {
        require(graph_path && kernel && table_json, "null argument");
        CsrGraph g = build_csr(read_edge_list(graph_path, format_from(format)));
        std::vector<int> counts;
        if (thread_counts && num_counts > 0)
            counts.assign(thread_counts, thread_counts + num_counts);
        else
            counts = {1, 2, 4, 8, 16, 32};
        SpeedupTable table =
            speedup_suite(kernel, g, params_from(params), counts, explicit_counts != 0,
                          repeats > 0 ? repeats : 3);
        *table_json = dup_string(table.to_json());
    });
}

gb_status gb_bench_stress(const char* kernel, const gb_kernel_params* params,
                          const char* ladder_path, int32_t threads, uint64_t mem_cap_bytes,
                          double timeout_s, char** rows_json_lines) {
    return guarded([&] {
        require(kernel && ladder_path && rows_json_lines, "null argument");
        auto rungs = parse_stress_ladder(ladder_path);
        auto rows = stress_ladder(kernel, params_from(params), rungs, threads > 0 ? threads : 1,
                                  mem_cap_bytes, timeout_s > 0 ? timeout_s : 300.0);
        std::string out;
        for (const auto& row : rows) {
            out += row.to_json();
            out += '\n';
        }
        *rows_json_lines = dup_string(out);
    });
}

gb_status gb_bench_impact(const char* const* kernels, uint64_t num_kernels,
                          const char* const* labels, const char* const* paths, uint64_t num_graphs,
                          const gb_kernel_params* params, int32_t threads, int32_t repeats,
                          int32_t as_csv, char** out) {
    return guarded([&] {
        require(kernels && labels && paths && out, "null argument");
        std::vector<std::string> ks(kernels, kernels + num_kernels);
        std::vector<std::pair<std::string, std::string>> graphs;
        for (uint64_t i = 0; i < num_graphs; ++i) graphs.emplace_back(labels[i], paths[i]);
        ImpactMatrix matrix = impact_matrix(ks, graphs, params_from(params),
                                            threads > 0 ? threads : 1, repeats > 0 ? repeats : 3);
        *out = dup_string(as_csv ? matrix.to_csv() : matrix.to_json());
    });
}

} // extern "C"
