import foxh


class TestMetadata:
    """ 배포 메타데이터 """

    def test_exported_names_resolve(self):
        for name in foxh.__all__:
            assert hasattr(foxh, name), name

    def test_project_metadata(self):
        assert foxh.__title__ == "foxh"
        assert foxh.__author__ == "foxh contributors"
        assert foxh.__author__ in foxh.__copyright__
        assert not hasattr(foxh, "__author_email__")
