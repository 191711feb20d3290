'''
radio_metrics
	correction/
		AdamWOptimizerClass.py
		ArchitectureClass.py
		CorrectionNetworkClass.py
		TrainConfigClass.py
		losses.py
	evaluation/
		EvaluationReportClass.py
		metrics.py
	experiments/
		DatasetClass.py
		ExperimentClass.py
		ExperimentParametersClass.py
		MetricKindClass.py
		ModelBundleClass.py
		PipelineConfigClass.py
		SplitManifestClass.py
	features/
		FeatureVectorClass.py
		StandardizerClass.py
		feature_helpers.py
	measurements/
		MeasurementRecordClass.py
		TransmitterClass.py
	propagation/
		PathLossModelClass.py
		RadioEstimateClass.py
		radio_identities.py
	scene/
		BuildingClass.py
		GeoPointClass.py
		RayTraversalClass.py
		SceneClass.py
		TerrainGridClass.py
		scene_io.py
	tasks/
		synthetic_city/
			SynthConfigClass.py
			SyntheticCityClass.py
	utils/
		additional_datastructures.py
		chart_utils.py
		geohash.py
		ingest.py
		kml_export.py
	cli.py
	errors.py
	run_experiments.py

License: Apache
'''

# Imports.
import radio_metrics.scene, radio_metrics.measurements, radio_metrics.features, radio_metrics.propagation
import radio_metrics.correction, radio_metrics.experiments, radio_metrics.evaluation, radio_metrics.tasks
import radio_metrics.run_experiments

from radio_metrics._version import __version__
