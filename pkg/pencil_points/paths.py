from pencil_points.constants import CSV_FILE_EXT, JSON_FILE_EXT


class Paths:
    """
    A single class to hold all file paths that a run may write.
    """

    def __init__(self, output_directory):
        self.output_directory = output_directory

        self.points_csv = self.join("points", CSV_FILE_EXT)
        self.points_json = self.join("points", JSON_FILE_EXT)
        self.certificates_json = self.join("certificates", JSON_FILE_EXT)
        self.bounds_csv = self.join("bounds", CSV_FILE_EXT)
        self.bounds_json = self.join("bounds", JSON_FILE_EXT)
        self.search_json = self.join("search", JSON_FILE_EXT)
        self.analysis_json = self.join("analysis", JSON_FILE_EXT)

    def join(self, name, extension):
        return self.output_directory / (name + extension)

    def make_directory(self):
        self.output_directory.mkdir(parents=True, exist_ok=True)
