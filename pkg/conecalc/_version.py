version = "None"
version_tuple = (0, 0, 0, "None", "None")
