'''
Evaluation: RMSE breakdowns and density comparisons.

    metrics: rmse, rmse_breakdown, kde, silverman_bandwidth.
    EvaluationReportClass: report building and CSV / SVG emission.
'''

# Grab classes.
from radio_metrics.evaluation.metrics import rmse, rmse_breakdown, kde, kde_grid, silverman_bandwidth
from radio_metrics.evaluation.EvaluationReportClass import EvaluationReport, evaluate, emit_report
