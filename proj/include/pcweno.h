#ifndef PCWENO_H
#define PCWENO_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define PCW_API __attribute__((visibility("default")))
#else
#define PCW_API
#endif

typedef enum pcw_status {
    PCW_OK = 0,
    PCW_ERR_INVALID_ARGUMENT = 1,
    PCW_ERR_VALIDATION = 2,
    PCW_ERR_SOLVER = 3,
    PCW_ERR_IO = 4,
    PCW_ERR_INTERNAL = 5
} pcw_status;

typedef struct pcw_config pcw_config;
typedef struct pcw_report pcw_report;

/* Message of the last failed call on this thread; never NULL. */
PCW_API const char* pcw_last_error(void);

/* 0 = debug, 1 = info, 2 = warnings, 3 = errors only */
PCW_API void pcw_set_log_level(int level);

PCW_API int pcw_case_count(void);
PCW_API const char* pcw_case_id(int index);
PCW_API const char* pcw_case_summary(int index);

PCW_API pcw_status pcw_config_create(pcw_config** out);
PCW_API void pcw_config_destroy(pcw_config* cfg);
PCW_API pcw_status pcw_config_set(pcw_config* cfg, const char* key, const char* value);
/* key=value text; later keys override earlier ones */
PCW_API pcw_status pcw_config_parse(pcw_config* cfg, const char* text);
PCW_API pcw_status pcw_config_load(pcw_config* cfg, const char* path);
PCW_API pcw_status pcw_config_validate(const pcw_config* cfg);

PCW_API pcw_status pcw_run(const pcw_config* cfg, pcw_report** out);
PCW_API pcw_status pcw_convergence(const pcw_config* cfg, pcw_report** out);
PCW_API pcw_status pcw_wellbalance(const pcw_config* cfg, pcw_report** out);

PCW_API void pcw_report_destroy(pcw_report* rep);
/* Human-readable summary owned by the report. */
PCW_API const char* pcw_report_text(const pcw_report* rep);
PCW_API double pcw_report_wall_seconds(const pcw_report* rep);
PCW_API int pcw_report_component_count(const pcw_report* rep);
PCW_API const char* pcw_report_component_name(const pcw_report* rep, int comp);
PCW_API int pcw_report_mesh_count(const pcw_report* rep, int comp);
PCW_API pcw_status pcw_report_error(const pcw_report* rep, int comp, int mesh, int* n, double* error);
/* order between mesh-1 and mesh; mesh >= 1 */
PCW_API pcw_status pcw_report_order(const pcw_report* rep, int comp, int mesh, double* order);
PCW_API pcw_status pcw_report_metric(const pcw_report* rep, const char* name, double* value);
PCW_API pcw_status pcw_report_write_orders(const pcw_report* rep, const char* path);

#ifdef __cplusplus
}
#endif

#endif
