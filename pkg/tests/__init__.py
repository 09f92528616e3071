# Video Toolkit Tests
