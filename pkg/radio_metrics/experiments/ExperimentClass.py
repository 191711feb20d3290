'''
ExperimentClass.py: Contains the Experiment Class for reproducing training and search runs.

Purpose:
    - Stores all relevant parameters in experiment directory for easy reproducibility.
    - Records per-epoch RMSE and per-trial search results.
    - Auto generates learning-curve plots using chart_utils.
'''

# Python imports.
import logging
import os

# Other imports.
import pandas as pd

from radio_metrics.utils import chart_utils
from radio_metrics.utils.additional_datastructures import dumps
from radio_metrics.experiments.ExperimentParametersClass import ExperimentParameters

logger = logging.getLogger(__name__)


class Experiment(object):
    ''' Experiment Class for radio metric model runs. '''

    FULL_EXP_FILE_NAME = "full_experiment_data.json"
    EXP_PARAM_FILE_NAME = "readable_experiment_data.txt"
    TRIALS_FILE_NAME = "trials.csv"

    # Dumps the results in a directory called "results" in the current working dir.
    RESULTS_DIR = "results"

    def __init__(self, name, config, scene=None, params=None, results_dir=None, clear_old_results=True,
                 exp_function="train_model"):
        '''
        Args:
            name (str): sub-directory of @results_dir.
            config (PipelineConfig)
            scene (Scene)
            params (dict): extra parameters to record.
            results_dir (str)
            clear_old_results (bool)
            exp_function (str): tracks which run_experiments.py function was called.
        '''
        self.name = str(name)
        self.config = config
        self.scene = scene
        self.parameters = ExperimentParameters(dict(params or {}))
        base = results_dir if results_dir is not None else os.path.join(os.getcwd(), Experiment.RESULTS_DIR)
        self.exp_directory = os.path.join(base, self.name)
        self.labels = []
        self.trials = []
        self._setup_files(clear_old_results)

        # Write experiment reproduction file.
        self._make_and_write_params(exp_function)

    def _make_and_write_params(self, exp_function):
        '''
        Summary:
            Writes the effective config, scene summary and extra parameters to
            results/<exp_name>/full_experiment_data.json.
        '''
        all_exp_info_dict = {"CONFIG": self.config.get_parameters(),
                             "MISC": self.parameters.params,
                             "FUNC": exp_function}
        if self.scene is not None:
            all_exp_info_dict["SCENE"] = {"name": str(self.scene), "digest": self.scene.digest()}
        with open(os.path.join(self.exp_directory, Experiment.FULL_EXP_FILE_NAME), "w") as out_file:
            out_file.write(dumps(all_exp_info_dict, indent=4) + "\n")

    def _setup_files(self, clear_old_results=True):
        '''
        Summary:
            Creates and removes relevant directories/files.
        '''
        if not os.path.exists(self.exp_directory):
            os.makedirs(self.exp_directory)
        elif clear_old_results:
            for file_name in os.listdir(self.exp_directory):
                if file_name.endswith(".csv"):
                    os.remove(os.path.join(self.exp_directory, file_name))
        self.write_exp_info_to_file()

    def add_epoch(self, label, train_rmse, validation_rmse):
        '''
        Summary:
            Record the RMSE pair of one epoch of the run named @label.
        '''
        for series, value in ((label + "-train", train_rmse), (label + "-validation", validation_rmse)):
            if series not in self.labels:
                self.labels.append(series)
            self.write_datum_to_file(series, value)

    def add_trial(self, row):
        '''
        Args:
            row (dict): one hyper_search trial; trials.csv is rewritten after every call.
        '''
        self.trials.append(dict(row))
        pd.DataFrame(self.trials).to_csv(os.path.join(self.exp_directory, Experiment.TRIALS_FILE_NAME), index=False)

    def write_datum_to_file(self, label, datum):
        with open(os.path.join(self.exp_directory, str(label)) + ".csv", "a+") as out_file:
            out_file.write(repr(float(datum)) + ",")

    def make_plots(self, labels=None, plot_file_name="learning_curve"):
        '''
        Summary:
            Makes plots for the current experiment.
        '''
        labels = self.labels if labels is None else labels
        if not labels:
            return None
        path = chart_utils.make_plots(self.exp_directory, labels, plot_file_name=plot_file_name)
        logger.info("Wrote %s", path)
        return path

    def write_exp_info_to_file(self):
        '''
        Summary:
            Writes relevant experiment information to a file for reproducibility.
        '''
        with open(os.path.join(self.exp_directory, Experiment.EXP_PARAM_FILE_NAME), "w+") as out_file:
            out_file.write(self._get_exp_file_string())

    def _get_exp_file_string(self):
        '''
        Returns:
            (str): contains the experiment name, the scene and PARAMETER-information.
        '''
        scene_string = "(Scene)\n\t" + (str(self.scene) if self.scene is not None else "none") + "\n"
        config_string = "(Config)" + str(ExperimentParameters(self.config.get_parameters())) + "\n"
        param_string = "(Params)" + str(self.parameters) + "\n"
        return "(Experiment)\n\t" + self.name + "\n" + scene_string + config_string + param_string

    def __str__(self):
        return self._get_exp_file_string()
